#include "packnorm/qhn_refine.hpp"

#include <algorithm>

#include "packnorm/error.hpp"

namespace packnorm::qhn {

namespace {

std::size_t size_t_from(const BigInt& v, std::size_t limit, Errc code, const char* what) {
  if (v < 0 || v > BigInt(limit)) fail(code, what);
  return v.convert_to<std::size_t>();
}

Window lowest_coords(const Window& w, std::size_t count) {
  std::vector<Coord> cs(w.coords().begin(), w.coords().begin() + count);
  return Window(std::move(cs));
}

}  // namespace

QCondition normalize_dense(const QCondition& p, Strictness mode) {
  require_valid(p, mode);
  PartialFunction w = p.w;
  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks(p.blocks.size());
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    std::size_t m = p.m_star + k;
    BigInt target = p.seq.n0(m) / big_pow(2, p.m_star) + 1;
    for (std::size_t j : p.blocks[k]) {
      const PartialFunction& sigma = p.sigmas[j];
      if (target <= BigInt(sigma.size())) {
        std::size_t t = target.convert_to<std::size_t>();
        sigmas.push_back(sigma.restrict_to(lowest_coords(sigma.domain(), t)));
        blocks[k].push_back(sigmas.size() - 1);
      } else {
        // Exactly-minimal sigma: no room to shrink to the normal size, so
        // decide it away with one conflicting stem value.
        Coord c = sigma.domain().min();
        Symbol s = sigma.value_at(c);
        w = w.with_entry(c, s == 0 ? 1 : 0);
      }
    }
  }
  QCondition q = make_qcondition(p.alpha, p.window, std::move(w), std::move(sigmas),
                                 p.m_star, std::move(blocks), p.seq);
  require_valid(q, mode);
  if (!leq_syntactic(p, q)) throw std::logic_error("normal form fell below the input");
  return q;
}

NullRefinement null_refinement(const QCondition& p, Strictness mode) {
  require_valid(p, mode);
  auto witness = growth_witness_index(p.seq, p.alpha);
  if (!witness)
    fail(Errc::truncation_too_short, "no growth-witness tail inside the sequence prefix");
  std::uint32_t m_star =
      std::max<std::uint32_t>(static_cast<std::uint32_t>(*witness), p.m_star + 6);
  if (m_star >= p.seq.size())
    fail(Errc::truncation_too_short, "growth-witness level is beyond the sequence prefix");

  // Fresh sigma domains must miss the stem and p's low-level material.
  Window avoid = p.w.domain();
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    std::size_t m = p.m_star + k;
    if (m >= m_star) continue;
    for (std::size_t j : p.blocks[k]) avoid = Window::set_union(avoid, p.sigmas[j].domain());
  }
  Window pool = p.window.minus(avoid);

  NullRefinement out;
  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t cursor = 0;
  out.total_measure = 1;
  out.bound_certified = true;
  for (std::size_t m = m_star; m < p.seq.size(); ++m) {
    std::size_t d = size_t_from(p.seq.n0(m), pool.size(), Errc::truncation_too_short,
                                "fresh sigma size exceeds the window");
    std::size_t count = size_t_from(p.seq.n1(m), pool.size(), Errc::truncation_too_short,
                                    "fresh sigma count exceeds the window");
    if (cursor + d * count > pool.size())
      fail(Errc::truncation_too_short, "window cannot host the fresh sigma family");
    std::vector<std::size_t> block;
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<Coord> cs(pool.coords().begin() + cursor,
                            pool.coords().begin() + cursor + d);
      cursor += d;
      sigmas.push_back(PartialFunction::constant(Window(std::move(cs)), 0));
      block.push_back(sigmas.size() - 1);
    }
    blocks.push_back(std::move(block));

    Rational measure = block_avoid_measure(p.alpha, d, count);
    BigInt exponent_big = big_pow(BigInt(p.alpha.size()), d);
    std::uint64_t exponent =
        exponent_big > BigInt(1'000'000)
            ? 0
            : exponent_big.convert_to<std::uint64_t>();
    bool certified = exponent > 0 && certified_at_most_exp_neg(measure, exponent);
    out.block_measures.push_back(measure);
    out.bound_exponents.push_back(exponent);
    out.bound_certified = out.bound_certified && certified;
    out.total_measure *= measure;
  }
  out.q = make_qcondition(p.alpha, p.window, p.w, std::move(sigmas), m_star,
                          std::move(blocks), p.seq);
  require_valid(out.q, mode);
  return out;
}

namespace {

void combinations(const std::vector<Coord>& pool, std::size_t size,
                  const std::function<bool(const std::vector<Coord>&)>& visit) {
  std::vector<Coord> current;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == size) return visit(current);
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      if (!rec(i + 1)) return false;
      current.pop_back();
    }
    return true;
  };
  rec(0);
}

}  // namespace

NowhereDenseReport nowhere_dense_check(const QCondition& p, std::size_t max_extra) {
  NowhereDenseReport report;
  Window base = p.w.domain();
  Window free = p.window.minus(base);
  for (std::size_t extra = 0; extra <= std::min(max_extra, free.size()); ++extra) {
    bool keep_going = true;
    combinations(free.coords(), extra, [&](const std::vector<Coord>& picked) {
      std::vector<Coord> cs = base.coords();
      cs.insert(cs.end(), picked.begin(), picked.end());
      Window stem_domain(std::move(cs));
      std::optional<std::size_t> fresh;
      for (std::size_t j = 0; j < p.sigmas.size(); ++j) {
        if (Window::disjoint(p.sigmas[j].domain(), stem_domain)) {
          fresh = j;
          break;
        }
      }
      if (fresh) {
        report.fresh_sigma = fresh;
        return true;
      }
      // Every sigma meets this stem domain: a stem conflicting each one
      // spans a cylinder inside POS.
      PartialFunction cylinder = p.w;
      for (const auto& sigma : p.sigmas) {
        Window overlap = sigma.domain().intersect(stem_domain);
        Coord c = overlap.min();
        Symbol s = sigma.value_at(c);
        cylinder = cylinder.with_entry(c, s == 0 ? 1 : 0);
      }
      for (Coord c : stem_domain.coords())
        if (!cylinder.defined(c)) cylinder = cylinder.with_entry(c, 0);
      report.nowhere_dense = false;
      report.fat_stem_domain = stem_domain;
      report.interior_cylinder = cylinder;
      keep_going = false;
      return false;
    });
    if (!keep_going) break;
  }
  return report;
}

bool aligned_with(const QCondition& p, const CoordMap& pi) {
  Window range = pi.range();
  for (const auto& sigma : p.sigmas)
    if (!sigma.domain().subset_of(range) && !Window::disjoint(sigma.domain(), range))
      return false;
  return true;
}

QCondition project_q(const QCondition& p, const CoordMap& pi) {
  if (!pi.range().subset_of(p.window))
    fail(Errc::bad_input, "embedding range must lie inside the window");
  if (!aligned_with(p, pi)) fail(Errc::not_aligned, "a sigma straddles the embedding's range");

  std::vector<std::pair<Coord, Symbol>> stem;
  for (const auto& [src, dst] : pi.entries()) {
    auto v = p.w.at(dst);
    if (v) stem.emplace_back(src, *v);
  }
  CoordMap inv = pi.inverse();
  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks(p.blocks.size());
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    for (std::size_t j : p.blocks[k]) {
      if (!p.sigmas[j].domain().subset_of(pi.range())) continue;
      sigmas.push_back(permute_pf(p.sigmas[j], inv));
      blocks[k].push_back(sigmas.size() - 1);
    }
  }
  return make_qcondition(p.alpha, pi.domain(), PartialFunction(std::move(stem)),
                         std::move(sigmas), p.m_star, std::move(blocks), p.seq);
}

QCondition project_pi_q(const QCondition& p, const CoordMap& pi, const QCondition& r,
                        Strictness mode) {
  if (!(r.window == pi.domain()))
    fail(Errc::bad_input, "completion source must live on the embedding's domain");
  if (!(r.alpha == p.alpha) || !(r.seq == p.seq))
    fail(Errc::bad_input, "completion source must match alphabet and sequence");
  require_valid(p, mode);
  require_valid(r, mode);
  QCondition proj = project_q(p, pi);  // also checks alignment
  if (!leq_syntactic(proj, r))
    fail(Errc::bad_input, "completion source must extend the projection");

  Window range = pi.range();
  std::uint32_t m_star = p.m_star + r.m_star + 1;

  PartialFunction stem = pf_union(permute_pf(r.w, pi), p.w.minus_domain(range));
  // Decide p's low sigmas that miss the range: one conflict, zero elsewhere.
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    std::size_t m = p.m_star + k;
    if (m >= m_star) continue;
    for (std::size_t j : p.blocks[k]) {
      const auto& sigma = p.sigmas[j];
      if (!Window::disjoint(sigma.domain(), range)) continue;
      Coord lowest = sigma.domain().min();
      for (const auto& [c, s] : sigma.entries())
        stem = stem.with_entry(c, c == lowest ? (s == 0 ? 1 : 0) : 0);
    }
  }
  // Same for r's low sigmas, pushed forward.
  for (std::size_t k = 0; k < r.blocks.size(); ++k) {
    std::size_t m = r.m_star + k;
    if (m >= m_star) continue;
    for (std::size_t j : r.blocks[k]) {
      PartialFunction tau = permute_pf(r.sigmas[j], pi);
      Coord lowest = tau.domain().min();
      for (const auto& [c, s] : tau.entries())
        stem = stem.with_entry(c, c == lowest ? (s == 0 ? 1 : 0) : 0);
    }
  }

  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks;
  auto place = [&](PartialFunction sigma, std::size_t m) {
    std::size_t level_index = m - m_star;
    if (blocks.size() <= level_index) blocks.resize(level_index + 1);
    sigmas.push_back(std::move(sigma));
    blocks[level_index].push_back(sigmas.size() - 1);
  };
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    std::size_t m = p.m_star + k;
    if (m < m_star) continue;
    for (std::size_t j : p.blocks[k])
      if (Window::disjoint(p.sigmas[j].domain(), range)) place(p.sigmas[j], m);
  }
  for (std::size_t k = 0; k < r.blocks.size(); ++k) {
    std::size_t m = r.m_star + k;
    if (m < m_star) continue;
    for (std::size_t j : r.blocks[k]) place(permute_pf(r.sigmas[j], pi), m);
  }

  QCondition q = make_qcondition(p.alpha, p.window, std::move(stem), std::move(sigmas),
                                 m_star, std::move(blocks), p.seq);
  require_valid(q, mode);
  if (!leq_syntactic(p, q)) throw std::logic_error("projection transport fell below the input");
  return q;
}

}  // namespace packnorm::qhn
