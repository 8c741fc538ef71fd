#include "packnorm/generators.hpp"

#include <algorithm>

#include "packnorm/error.hpp"

namespace packnorm::gen {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(Errc::bad_input, "empty draw range");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % n;
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) fail(Errc::bad_input, "empty draw range");
  return lo + below(hi - lo + 1);
}

namespace {

Window random_subset(Rng& rng, const Window& pool, std::size_t count) {
  std::vector<Coord> coords = pool.coords();
  std::vector<Coord> picked;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t at = rng.below(coords.size());
    picked.push_back(coords[at]);
    coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return Window(std::move(picked));
}

PartialFunction random_pf(Rng& rng, const Alphabet& alpha, const Window& dom) {
  std::vector<std::pair<Coord, Symbol>> entries;
  for (Coord c : dom.coords())
    entries.emplace_back(c, static_cast<Symbol>(rng.below(alpha.size())));
  return PartialFunction(std::move(entries));
}

}  // namespace

Creature random_creature(Rng& rng, const CreatureGenConfig& config) {
  Window pool = Window::interval(0, config.coord_span);
  for (std::size_t attempt = 0; attempt < config.retry_cap; ++attempt) {
    std::size_t z_size = rng.between(config.z_min, std::min<std::uint64_t>(config.z_max, pool.size()));
    Window z = random_subset(rng, pool, z_size);
    std::size_t d_size = rng.between(config.delta_min, config.delta_max);
    std::vector<PartialFunction> delta;
    for (std::size_t i = 0; i < d_size; ++i) {
      std::size_t dom_size = rng.between(1, z.size());
      delta.push_back(random_pf(rng, config.alpha, random_subset(rng, z, dom_size)));
    }
    Creature t = Creature::make(z, std::move(delta), config.budget);
    if (t.n() >= config.min_n && t.valid()) return t;
  }
  fail(Errc::generation_failed, "no creature met the norm floor within the retry cap");
}

namespace {

Creature random_run_creature(Rng& rng, const ConditionGenConfig& config, Coord lo, Coord hi) {
  Window z = Window::interval(lo, hi);
  for (std::size_t attempt = 0; attempt < config.retry_cap; ++attempt) {
    std::vector<PartialFunction> delta;
    if (config.constant_delta_only) {
      delta.push_back(PartialFunction::constant(z, 0));
    } else {
      switch (rng.below(3)) {
        case 0:
          delta.push_back(PartialFunction::constant(
              z, static_cast<Symbol>(rng.below(config.alpha.size()))));
          break;
        case 1:
          delta.push_back(random_pf(rng, config.alpha, z));
          break;
        default:
          delta.push_back(random_pf(rng, config.alpha, z));
          delta.push_back(random_pf(rng, config.alpha, z));
          break;
      }
    }
    Creature t = Creature::make(z, std::move(delta), config.budget);
    if (!t.infinite_norm() && t.n() >= config.min_n) return t;
  }
  fail(Errc::generation_failed, "no run creature met the norm floor within the retry cap");
}

}  // namespace

TruncatedCondition random_condition(Rng& rng, const ConditionGenConfig& config) {
  if (config.stem_coords >= config.window_size)
    fail(Errc::bad_input, "stem must leave room for creatures");
  // The packing number never exceeds the run length, so runs stretch to the
  // requested norm floor.
  ConditionGenConfig cg = config;
  cg.run_min = std::max<std::size_t>(cg.run_min, cg.min_n);
  cg.run_max = std::max(cg.run_max, cg.run_min);
  if (cg.stem_coords + cg.run_min > cg.window_size)
    fail(Errc::generation_failed, "window too small for the requested norm floor");
  Window window = Window::interval(0, cg.window_size);
  PartialFunction w =
      random_pf(rng, cg.alpha, Window::interval(0, static_cast<Coord>(cg.stem_coords)));
  std::vector<Creature> creatures;
  Coord cursor = static_cast<Coord>(cg.stem_coords);
  while (cursor < cg.window_size) {
    Coord remaining = cg.window_size - cursor;
    Coord run = static_cast<Coord>(rng.between(cg.run_min, cg.run_max));
    if (run > remaining) run = remaining;
    if (remaining - run < cg.run_min && remaining - run > 0) run = remaining;
    creatures.push_back(random_run_creature(rng, cg, cursor, cursor + run));
    cursor += run;
  }
  return make_condition(cg.alpha, window, w, std::move(creatures), Flavor::q_plus_infinity);
}

std::vector<TruncatedCondition> random_amalgam_family(Rng& rng,
                                                      const ConditionGenConfig& config,
                                                      std::size_t count) {
  // Shared stem; independent creature layouts.
  Window window = Window::interval(0, config.window_size);
  PartialFunction w =
      random_pf(rng, config.alpha, Window::interval(0, static_cast<Coord>(config.stem_coords)));
  std::vector<TruncatedCondition> out;
  for (std::size_t i = 0; i < count; ++i) {
    TruncatedCondition p = random_condition(rng, config);
    p.w = w;
    std::vector<Creature> creatures = p.creatures;
    out.push_back(make_condition(config.alpha, window, w, std::move(creatures),
                                 Flavor::q_plus_infinity));
  }
  return out;
}

TruncatedCondition random_strengthening(Rng& rng, const TruncatedCondition& p,
                                        std::size_t steps, MoveCertificate& cert,
                                        const Budget& budget) {
  TruncatedCondition cur = p;
  for (std::size_t step = 0; step < steps; ++step) {
    std::uint64_t kind = rng.below(3);
    if (kind == 0 && !cur.creatures.empty()) {
      // Decide a random nonempty batch of creatures to value-set members.
      std::vector<std::size_t> indices;
      for (std::size_t i = 0; i < cur.creatures.size(); ++i)
        if (rng.chance(1, 3)) indices.push_back(i);
      if (indices.empty()) indices.push_back(rng.below(cur.creatures.size()));
      PartialFunction w_star = cur.w;
      bool feasible = true;
      for (auto i : indices) {
        auto values = value_set(cur.alpha, cur.creatures[i], budget);
        if (values.empty()) {
          feasible = false;
          break;
        }
        auto& pick = values[rng.below(values.size())];
        w_star = pf_union(w_star, assignment_to_pf(cur.creatures[i].z(), pick));
      }
      if (!feasible) continue;
      DecideMove move{std::move(indices), std::move(w_star)};
      cur = apply_move(cur, move, budget);
      cert.moves.emplace_back(std::move(move));
    } else if (kind == 1 && cur.creatures.size() >= 2) {
      std::size_t i = rng.below(cur.creatures.size());
      std::size_t j = rng.below(cur.creatures.size());
      if (i == j) continue;
      Creature glued = glue({cur.creatures[i], cur.creatures[j]}, budget);
      if (rng.chance(1, 2)) {
        // Composition may also add a fresh constraint, when the norm allows.
        std::size_t extra_size = rng.between(1, std::min<std::size_t>(3, glued.z().size()));
        PartialFunction extra =
            random_pf(rng, cur.alpha, random_subset(rng, glued.z(), extra_size));
        std::vector<PartialFunction> delta = glued.delta();
        delta.push_back(extra);
        Creature widened = Creature::make(glued.z(), std::move(delta), budget);
        if (widened.valid() && !widened.infinite_norm()) glued = widened;
      }
      SigmaMove move{{SigmaGroup{{i, j}, std::move(glued)}}};
      cur = apply_move(cur, move, budget);
      cert.moves.emplace_back(std::move(move));
    } else if (cur.creatures.size() > 0) {
      std::size_t i = rng.below(cur.creatures.size());
      const Creature& t = cur.creatures[i];
      if (t.z().size() < 2) continue;
      std::size_t split = rng.between(1, t.z().size() - 1);
      Window left(std::vector<Coord>(t.z().coords().begin(),
                                     t.z().coords().begin() + static_cast<std::ptrdiff_t>(split)));
      Creature s0 = t, s1 = t;
      try {
        std::tie(s0, s1) = cut(t, left, budget);
      } catch (const Error&) {
        continue;
      }
      // Keep endpoints finite-norm: both sides must retain constraints.
      if (!s0.valid() || !s1.valid() || s0.infinite_norm() || s1.infinite_norm()) continue;
      SigmaBotMove move{i, {s0, s1}};
      cur = apply_move(cur, move, budget);
      cert.moves.emplace_back(std::move(move));
    }
  }
  return cur;
}

qhn::QCondition random_qcondition(Rng& rng, const QGenConfig& config) {
  using qhn::Strictness;
  for (std::size_t attempt = 0; attempt < config.retry_cap; ++attempt) {
    Window pool = config.window;
    std::size_t stem_size = rng.between(0, config.stem_max);
    if (stem_size > pool.size()) continue;
    Window stem_dom = random_subset(rng, pool, stem_size);
    pool = pool.minus(stem_dom);
    PartialFunction w = random_pf(rng, config.alpha, stem_dom);

    std::size_t count = rng.between(0, config.sigmas_max);
    std::vector<PartialFunction> sigmas;
    std::vector<std::vector<std::size_t>> blocks(config.levels);
    std::vector<std::size_t> level_count(config.levels, 0);
    bool feasible = true;
    for (std::size_t s = 0; s < count && feasible; ++s) {
      std::size_t k = rng.below(config.levels);
      std::size_t m = config.m_star + k;
      if (m >= config.seq.size()) {
        feasible = false;
        break;
      }
      BigInt min_size_big = (config.seq.n0(m) + big_pow(2, config.m_star) - 1) /
                            big_pow(2, config.m_star);  // ceiling
      if (min_size_big > BigInt(pool.size())) {
        feasible = false;
        break;
      }
      BigInt cap = config.seq.n1(m) * big_pow(2, config.m_star);
      if (BigInt(level_count[k] + 1) > cap) {
        feasible = false;
        break;
      }
      std::size_t min_size = min_size_big.convert_to<std::size_t>();
      std::size_t size = min_size + rng.between(0, config.sigma_pad);
      if (size > pool.size()) {
        feasible = false;
        break;
      }
      Window dom = random_subset(rng, pool, size);
      pool = pool.minus(dom);
      sigmas.push_back(random_pf(rng, config.alpha, dom));
      blocks[k].push_back(sigmas.size() - 1);
      level_count[k] += 1;
    }
    if (!feasible) continue;
    qhn::QCondition p = qhn::make_qcondition(config.alpha, config.window, w, std::move(sigmas),
                                             config.m_star, std::move(blocks), config.seq);
    if (validate_qcondition(p, Strictness::relaxed).ok) return p;
  }
  fail(Errc::generation_failed, "no valid condition within the retry cap");
}

std::vector<qhn::QCondition> random_class_family(Rng& rng, const QGenConfig& config,
                                                 std::size_t n, std::size_t high_per_cond) {
  using qhn::Strictness;
  std::size_t high_level = config.m_star + n + 2;
  if (high_level >= config.seq.size())
    fail(Errc::bad_input, "sequence prefix too short for the class parameter");

  for (std::size_t attempt = 0; attempt < config.retry_cap; ++attempt) {
    Window pool = config.window;
    std::size_t stem_size = rng.between(0, config.stem_max);
    Window stem_dom = random_subset(rng, pool, stem_size);
    pool = pool.minus(stem_dom);
    PartialFunction w = random_pf(rng, config.alpha, stem_dom);

    // Shared low levels.
    std::vector<PartialFunction> low_sigmas;
    std::vector<std::size_t> low_level;  // block offset of each low sigma
    std::size_t low_count = rng.between(0, config.sigmas_max);
    bool feasible = true;
    for (std::size_t s = 0; s < low_count && feasible; ++s) {
      std::size_t k = rng.below(n + 2);
      std::size_t m = config.m_star + k;
      if (m >= config.seq.size()) continue;
      BigInt min_size_big =
          (config.seq.n0(m) + big_pow(2, config.m_star) - 1) / big_pow(2, config.m_star);
      if (min_size_big > BigInt(pool.size())) {
        feasible = false;
        break;
      }
      std::size_t size = min_size_big.convert_to<std::size_t>() + rng.between(0, config.sigma_pad);
      if (size > pool.size()) {
        feasible = false;
        break;
      }
      Window dom = random_subset(rng, pool, size);
      pool = pool.minus(dom);
      low_sigmas.push_back(random_pf(rng, config.alpha, dom));
      low_level.push_back(k);
    }
    if (!feasible) continue;

    BigInt high_min_big = (config.seq.n0(high_level) + big_pow(2, config.m_star) - 1) /
                          big_pow(2, config.m_star);
    if (high_min_big > BigInt(pool.size())) continue;
    std::size_t high_min = high_min_big.convert_to<std::size_t>();

    std::vector<qhn::QCondition> out;
    bool family_ok = true;
    for (std::size_t cond = 0; cond <= n && family_ok; ++cond) {
      std::vector<PartialFunction> sigmas = low_sigmas;
      std::vector<std::vector<std::size_t>> blocks(n + 3);
      for (std::size_t s = 0; s < low_sigmas.size(); ++s) blocks[low_level[s]].push_back(s);
      for (std::size_t h = 0; h < high_per_cond; ++h) {
        std::size_t size = high_min + rng.between(0, config.sigma_pad);
        if (size > pool.size()) {
          family_ok = false;
          break;
        }
        Window dom = random_subset(rng, pool, size);
        pool = pool.minus(dom);
        sigmas.push_back(random_pf(rng, config.alpha, dom));
        blocks[n + 2].push_back(sigmas.size() - 1);
      }
      if (!family_ok) break;
      qhn::QCondition p = qhn::make_qcondition(config.alpha, config.window, w, std::move(sigmas),
                                               config.m_star, std::move(blocks), config.seq);
      if (!validate_qcondition(p, Strictness::relaxed).ok) {
        family_ok = false;
        break;
      }
      out.push_back(std::move(p));
    }
    if (family_ok && out.size() == n + 1) return out;
  }
  fail(Errc::generation_failed, "no valid class family within the retry cap");
}

}  // namespace packnorm::gen
