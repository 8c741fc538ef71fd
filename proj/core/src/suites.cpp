#include "packnorm/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include <json.hpp>

#include "packnorm/amalgamate.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/json_io.hpp"
#include "packnorm/measure.hpp"
#include "packnorm/q_projection.hpp"
#include "packnorm/qhn_compat.hpp"
#include "packnorm/qhn_refine.hpp"
#include "packnorm/reference.hpp"

namespace packnorm::suites {

using nlohmann::json;
using qhn::Strictness;

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class Collector {
public:
  explicit Collector(SuiteReport& report) : report_(report) {}

  void check(const std::string& property, bool ok, std::uint64_t seed, std::size_t index,
             const std::function<std::string()>& payload = {}) {
    PropertyResult& slot = find(property);
    if (ok) {
      ++slot.pass;
      return;
    }
    ++slot.fail;
    report_.ok = false;
    if (slot.counterexamples.size() < kMaxCounterexamples) {
      json j{{"suite", report_.suite}, {"property", property}, {"seed", seed}, {"index", index}};
      if (payload) j["instance"] = json::parse(payload(), nullptr, false);
      slot.counterexamples.push_back(j.dump());
    }
  }

private:
  PropertyResult& find(const std::string& property) {
    for (auto& p : report_.properties)
      if (p.property == property) return p;
    report_.properties.push_back(PropertyResult{property});
    return report_.properties.back();
  }

  SuiteReport& report_;
};

std::uint64_t instance_seed(const SuiteConfig& config, std::size_t index) {
  // splitmix-style stream derivation: stable across platforms and runs
  std::uint64_t z = config.seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool skip_instance(const SuiteConfig& config, std::size_t index) {
  return config.only_index && *config.only_index != index;
}

// ---------------------------------------------------------------- group axioms

void suite_group_axioms(const SuiteConfig& config, Collector& out) {
  static const std::vector<std::vector<std::uint32_t>> kOrderLists = {
      {2},    {3},    {4},   {5},    {6},    {7},      {8},    {9},
      {10},   {11},   {12},  {2, 2}, {2, 3}, {2, 2, 2}, {3, 3}, {2, 2, 3},
      {2, 5}, {2, 6}, {3, 4}};
  std::size_t index = 0;
  for (const auto& orders : kOrderLists) {
    if (skip_instance(config, index)) {
      ++index;
      continue;
    }
    Alphabet alpha(orders);
    auto dump = [&] { return to_json(alpha); };
    bool assoc = true, comm = true, ident = true, inverse = true;
    for (Symbol a = 0; a < alpha.size(); ++a) {
      for (Symbol b = 0; b < alpha.size(); ++b) {
        if (alpha.add(a, b) != alpha.add(b, a)) comm = false;
        for (Symbol c = 0; c < alpha.size(); ++c)
          if (alpha.add(alpha.add(a, b), c) != alpha.add(a, alpha.add(b, c))) assoc = false;
      }
      if (alpha.add(a, 0) != a) ident = false;
      if (alpha.add(a, alpha.neg(a)) != 0) inverse = false;
    }
    out.check("associativity", assoc, config.seed, index, dump);
    out.check("commutativity", comm, config.seed, index, dump);
    out.check("identity", ident, config.seed, index, dump);
    out.check("inverses", inverse, config.seed, index, dump);
    ++index;
  }
}

// ------------------------------------------------------------------- pf ops

void suite_pf_ops(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    Window span = Window::interval(0, 8);
    gen::CreatureGenConfig cg;
    cg.alpha = config.alpha;
    cg.coord_span = 8;
    cg.z_max = 4;
    cg.delta_max = 2;
    Creature t = gen::random_creature(rng, cg);
    const PartialFunction eta = t.delta().front();
    // Total translation vector over the span.
    std::vector<std::pair<Coord, Symbol>> ventries;
    for (Coord c : span.coords())
      ventries.emplace_back(c, static_cast<Symbol>(rng.below(config.alpha.size())));
    PartialFunction v(ventries);
    auto dump = [&] { return to_json(config.alpha, eta); };

    PartialFunction back =
        translate_pf(config.alpha, translate_pf(config.alpha, eta, v), negate_pf(config.alpha, v));
    out.check("translate-roundtrip", back == eta, config.seed, i, dump);

    CoordMap shift = CoordMap::shift(span, 5);
    PartialFunction permuted_back = permute_pf(permute_pf(eta, shift), shift.inverse());
    out.check("permute-roundtrip", permuted_back == eta, config.seed, i, dump);

    // Union commutes with translation and permutation on compatible halves.
    Window dom = eta.domain();
    if (dom.size() >= 2) {
      Window first(std::vector<Coord>{dom.coords().front()});
      PartialFunction a = eta.restrict_to(first);
      PartialFunction b = eta.minus_domain(first);
      bool commute_t = translate_pf(config.alpha, pf_union(a, b), v) ==
                       pf_union(translate_pf(config.alpha, a, v), translate_pf(config.alpha, b, v));
      bool commute_p =
          permute_pf(pf_union(a, b), shift) == pf_union(permute_pf(a, shift), permute_pf(b, shift));
      out.check("union-translate-commute", commute_t, config.seed, i, dump);
      out.check("union-permute-commute", commute_p, config.seed, i, dump);
    }

    // Enumeration yields exactly |X|^k pairwise distinct assignments.
    Window small = Window::interval(0, 3);
    PointEnumerator points(config.alpha, small, config.budget);
    std::vector<std::vector<Symbol>> seen;
    std::vector<Symbol> x;
    while (points.next(x)) seen.push_back(x);
    bool distinct = true;
    for (std::size_t a = 0; a < seen.size() && distinct; ++a)
      for (std::size_t b = a + 1; b < seen.size(); ++b)
        if (seen[a] == seen[b]) {
          distinct = false;
          break;
        }
    std::uint64_t expected = 1;
    for (int k = 0; k < 3; ++k) expected *= config.alpha.size();
    out.check("enumeration-count", seen.size() == expected && distinct, config.seed, i, dump);
  }
}

// -------------------------------------------------------------- norm structure

void suite_norm_structure(const SuiteConfig& config, Collector& out) {
  // Baseline: the constant-zero constraint on z has packing number |z|.
  std::size_t index = 0;
  for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    if (skip_instance(config, index)) {
      ++index;
      continue;
    }
    std::vector<Coord> cs;
    for (Coord c = 0; c < 7; ++c)
      if (mask >> c & 1) cs.push_back(c);
    Window z(cs);
    std::uint64_t n = norm_n(z, {PartialFunction::constant(z, 0)}, config.budget);
    out.check("constant-baseline", n == z.size(), config.seed, index,
              [&] { return to_json(z); });
    ++index;
  }

  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::CreatureGenConfig cg;
    cg.alpha = config.alpha;
    cg.coord_span = 8;
    cg.z_min = 2;
    cg.z_max = 5;
    cg.delta_min = 2;
    cg.delta_max = 5;
    cg.min_n = 0;
    Creature t = gen::random_creature(rng, cg);
    auto dump = [&] { return to_json(config.alpha, t); };

    out.check("matches-reference", t.n() == reference::norm_by_definition(t.delta()),
              config.seed, i, dump);

    // Antitone in the family: every subfamily has at least the full norm.
    bool antitone = true;
    for (std::uint32_t sub = 1; sub + 1 < (1u << t.delta().size()); ++sub) {
      std::vector<PartialFunction> part;
      for (std::size_t k = 0; k < t.delta().size(); ++k)
        if (sub >> k & 1) part.push_back(t.delta()[k]);
      if (norm_n(t.z(), part, config.budget) < t.n()) antitone = false;
    }
    out.check("antitone", antitone, config.seed, i, dump);

    std::size_t min_dom = t.z().size();
    for (const auto& eta : t.delta()) min_dom = std::min(min_dom, eta.size());
    out.check("upper-bound", t.n() <= min_dom, config.seed, i, dump);
  }
}

// ------------------------------------------------------------------- witness

void suite_witness(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::CreatureGenConfig cg;
    cg.alpha = config.alpha;
    cg.coord_span = 10;
    cg.z_max = 6;
    cg.delta_max = 5;
    cg.min_n = 1;
    Creature t = gen::random_creature(rng, cg);
    auto dump = [&] { return to_json(config.alpha, t); };

    PartialFunction w = witness_value(config.alpha, t);
    out.check("witness-in-value-set", value_member_pf(t, w), config.seed, i, dump);

    // Distinct-representative matching succeeds exactly under Hall's condition.
    bool hall = reference::hall_condition(t.delta());
    bool matched = true;
    std::vector<Coord> reps;
    try {
      reps = sdr(t.delta());
    } catch (const Error&) {
      matched = false;
    }
    out.check("sdr-iff-hall", matched == hall, config.seed, i, dump);
    if (matched) {
      bool ok = true;
      for (std::size_t a = 0; a < reps.size(); ++a) {
        if (!t.delta()[a].defined(reps[a])) ok = false;
        for (std::size_t b = a + 1; b < reps.size(); ++b)
          if (reps[a] == reps[b]) ok = false;
      }
      out.check("sdr-distinct", ok, config.seed, i, dump);
    }
  }
}

// ---------------------------------------------------------------- norm bounds

void suite_norm_bounds(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::CreatureGenConfig cg;
    cg.alpha = config.alpha;
    cg.coord_span = 10;
    cg.z_min = 2;
    cg.z_max = 6;
    cg.delta_max = 4;
    cg.min_n = 1;
    Creature t = gen::random_creature(rng, cg);
    auto dump = [&] { return to_json(config.alpha, t); };

    // Half-restriction keeps at least half the packing number.
    std::size_t keep = rng.between(1, t.z().size() - (t.z().size() > 1 ? 1 : 0));
    std::vector<Coord> cs(t.z().coords().begin(), t.z().coords().begin() + keep);
    Window z_star{std::vector<Coord>(cs)};
    try {
      Creature restricted = restrict_half(t, z_star, config.budget);
      std::uint64_t ref = reference::norm_by_definition(restricted.delta());
      out.check("restriction-bound", ref >= t.n() / 2 && restricted.n() == ref, config.seed, i,
                dump);
    } catch (const Error& e) {
      out.check("restriction-bound", e.code() == Errc::empty_restriction, config.seed, i, dump);
    }

    // Composition keeps the member minimum.
    gen::CreatureGenConfig cg2 = cg;
    cg2.coord_span = 10;
    Creature other = gen::random_creature(rng, cg2);
    if (Window::disjoint(t.z(), other.z())) {
      Creature glued = glue({t, other}, config.budget);
      std::uint64_t ref = reference::norm_by_definition(glued.delta());
      out.check("composition-bound", ref >= std::min(t.n(), other.n()) && glued.n() == ref,
                config.seed, i, dump);
    }

    // Linking keeps half the weaker side.
    std::vector<PartialFunction> delta1;
    std::size_t extras = rng.between(1, 2);
    for (std::size_t k = 0; k < extras; ++k) {
      std::size_t dom_size = rng.between(1, t.z().size());
      std::vector<Coord> pool = t.z().coords();
      std::vector<Coord> dom;
      for (std::size_t d = 0; d < dom_size; ++d) {
        std::size_t at = rng.below(pool.size());
        dom.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
      }
      std::vector<std::pair<Coord, Symbol>> entries;
      for (Coord c : dom) entries.emplace_back(c, static_cast<Symbol>(rng.below(config.alpha.size())));
      delta1.emplace_back(std::move(entries));
    }
    Creature t1 = Creature::make(t.z(), std::move(delta1), config.budget);
    if (t1.valid() && !t1.infinite_norm()) {
      Creature linked = link(t, t1, config.budget);
      std::uint64_t ref = reference::norm_by_definition(linked.delta());
      out.check("link-bound", ref >= std::min(t.n() / 2, t1.n() / 2) && linked.n() == ref,
                config.seed, i, dump);
    }
  }
}

// ---------------------------------------------------------------- sigma axioms

void suite_sigma_axioms(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    std::vector<Creature> members;
    Coord cursor = 0;
    std::size_t count = rng.between(2, 3);
    for (std::size_t k = 0; k < count; ++k) {
      Coord run = static_cast<Coord>(rng.between(2, 3));
      Window z = Window::interval(cursor, cursor + run);
      cursor += run;
      std::vector<PartialFunction> delta{PartialFunction::constant(
          z, static_cast<Symbol>(rng.below(config.alpha.size())))};
      members.push_back(Creature::make(z, std::move(delta), config.budget));
    }
    Creature t = glue(members, config.budget);
    auto dump = [&] { return to_json(config.alpha, t); };

    out.check("self-composition", sigma_member(t, {t}), config.seed, i, dump);
    out.check("compose-membership", sigma_member(t, members), config.seed, i, dump);
    out.check("self-decomposition", sigma_bot_member({t}, t), config.seed, i, dump);

    // Composition restricts value sets memberwise.
    bool beta = true;
    for (const auto& x : value_set(config.alpha, t, config.budget)) {
      PartialFunction xf = assignment_to_pf(t.z(), x);
      for (const auto& s : members)
        if (!value_member_pf(s, xf.restrict_to(s.z()))) beta = false;
    }
    out.check("compose-value-restriction", beta, config.seed, i, dump);

    // Associativity: composing compositions lands in the flat composition.
    if (members.size() == 3) {
      Creature s01 = glue({members[0], members[1]}, config.budget);
      Creature nested = glue({s01, members[2]}, config.budget);
      out.check("compose-associativity", sigma_member(nested, members), config.seed, i, dump);
    }

    // Cut decomposes, with the advertised norm halves.
    if (t.z().size() >= 2) {
      std::size_t split = rng.between(1, t.z().size() - 1);
      Window left(std::vector<Coord>(t.z().coords().begin(),
                                     t.z().coords().begin() + static_cast<std::ptrdiff_t>(split)));
      auto [s0, s1] = cut(t, left, config.budget);
      out.check("cut-decomposes", sigma_bot_member({s0, s1}, t), config.seed, i, dump);
      bool halves = (s0.infinite_norm() || s0.n() >= t.n() / 2) &&
                    (s1.infinite_norm() || s1.n() >= t.n() / 2);
      out.check("cut-halves", halves, config.seed, i, dump);

      // Concatenating decompositions decomposes the original.
      if (s0.z().size() >= 2 && !s0.infinite_norm()) {
        Window left2(std::vector<Coord>(s0.z().coords().begin(), s0.z().coords().begin() + 1));
        auto [s00, s01] = cut(s0, left2, config.budget);
        out.check("decompose-concatenation", sigma_bot_member({s00, s01, s1}, t), config.seed, i,
                  dump);
      }

      // Every constraint restricts into the majority side.
      bool covered = true;
      for (const auto& eta : t.delta()) {
        PartialFunction r0 = eta.restrict_to(s0.z());
        PartialFunction r1 = eta.restrict_to(s1.z());
        bool in0 = !r0.empty() && std::find(s0.delta().begin(), s0.delta().end(), r0) !=
                                      s0.delta().end();
        bool in1 = !r1.empty() && std::find(s1.delta().begin(), s1.delta().end(), r1) !=
                                      s1.delta().end();
        if (!in0 && !in1) covered = false;
      }
      out.check("cut-covers-constraints", covered, config.seed, i, dump);
    }

    // Full value set exactly characterizes infinite norm.
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < t.z().size(); ++k) total *= config.alpha.size();
    out.check("full-sval-iff-infinite",
              (value_count(config.alpha, t, config.budget) == total) == t.infinite_norm(),
              config.seed, i, dump);
  }
}

// ------------------------------------------------------------------ invariance

void suite_invariance(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::CreatureGenConfig cg;
    cg.alpha = config.alpha;
    cg.coord_span = 6;
    cg.z_max = 4;
    cg.delta_max = 4;
    cg.min_n = 1;
    Creature t = gen::random_creature(rng, cg);
    auto dump = [&] { return to_json(config.alpha, t); };

    // Exhaustive over all translation vectors on z.
    bool norm_kept = true, values_shift = true;
    PointEnumerator vs(config.alpha, t.z(), config.budget);
    std::vector<Symbol> vv;
    auto base_values = value_set(config.alpha, t, config.budget);
    while (vs.next(vv)) {
      PartialFunction v = assignment_to_pf(t.z(), vv);
      Creature shifted = translate_creature(config.alpha, t, v, config.budget);
      if (shifted.n() != t.n() ||
          reference::norm_by_definition(shifted.delta()) != t.n())
        norm_kept = false;
      auto shifted_values = value_set(config.alpha, shifted, config.budget);
      std::vector<std::vector<Symbol>> expected;
      for (const auto& x : base_values) {
        std::vector<Symbol> y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) y[k] = config.alpha.add(x[k], vv[k]);
        expected.push_back(y);
      }
      std::sort(expected.begin(), expected.end());
      if (shifted_values != expected) values_shift = false;
    }
    out.check("translation-preserves-norm", norm_kept, config.seed, i, dump);
    out.check("translation-shifts-values", values_shift, config.seed, i, dump);

    // Relabelings: identity is a fixed point; shifts preserve the norm and
    // transport value sets.
    CoordMap identity = CoordMap::identity(t.z());
    out.check("identity-relabel", permute_creature(t, identity, config.budget) == t,
              config.seed, i, dump);
    CoordMap shift = CoordMap::shift(t.z(), 7);
    Creature moved = permute_creature(t, shift, config.budget);
    bool perm_ok = moved.n() == t.n() &&
                   reference::norm_by_definition(moved.delta()) == t.n() &&
                   permute_creature(moved, shift.inverse(), config.budget) == t;
    auto moved_values = value_set(config.alpha, moved, config.budget);
    perm_ok = perm_ok && moved_values == base_values;  // same coords order, shifted labels
    out.check("relabel-preserves-norm", perm_ok, config.seed, i, dump);
  }
}

// ---------------------------------------------------------------- pos monotone

void suite_pos_monotone(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::ConditionGenConfig cg;
    cg.alpha = config.alpha;
    cg.window_size = 12;
    cg.stem_coords = 1;
    cg.run_min = 3;
    cg.run_max = 5;
    cg.min_n = 2;
    TruncatedCondition p = gen::random_condition(rng, cg);
    auto dump = [&] { return to_json(p); };

    // Each single move shrinks POS.
    TruncatedCondition cur = p;
    bool shrink = true;
    for (std::size_t step = 0; step < 3; ++step) {
      MoveCertificate cert;
      TruncatedCondition next = gen::random_strengthening(rng, cur, 1, cert, config.budget);
      if (cert.moves.empty()) continue;
      if (!pos_subset(next, cur, config.budget)) shrink = false;
      cur = next;
    }
    out.check("single-move-shrinks", shrink, config.seed, i, dump);

    // Certified order implies semantic containment.
    MoveCertificate cert;
    TruncatedCondition q = gen::random_strengthening(rng, p, 3, cert, config.budget);
    bool certified = leq_check(p, q, cert, config.budget);
    out.check("certificate-replays", certified, config.seed, i, dump);
    out.check("certified-implies-contained", !certified || leq_semantic(p, q, config.budget),
              config.seed, i, dump);
    out.check("moves-validate", validate(q).ok, config.seed, i, dump);
  }
}

// --------------------------------------------------------------- amalgamation

void suite_amalgamation(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::ConditionGenConfig cg;
    cg.alpha = config.alpha;
    cg.window_size = static_cast<Coord>(12 + rng.below(5));
    cg.stem_coords = 1 + rng.below(2);
    cg.run_min = 5;
    cg.run_max = 8;
    cg.min_n = 5;
    std::size_t count = 2 + rng.below(2);
    auto family = gen::random_amalgam_family(rng, cg, count);
    Slack slack = Slack::linear(Rational(0), Rational(1, 3));
    auto dump = [&] { return to_json(family[0]); };
    try {
      AmalgamResult result = amalgamate(family, slack, config.budget);
      bool certs_ok = true, contained = true;
      for (std::size_t l = 0; l < family.size(); ++l) {
        if (!leq_check(family[l], result.q, result.certificates[l], config.budget))
          certs_ok = false;
        if (!pos_subset(result.q, family[l], config.budget)) contained = false;
      }
      out.check("certificates-replay", certs_ok, config.seed, i, dump);
      out.check("pos-contained", contained, config.seed, i, dump);
      out.check("pos-nonempty", pos_example(result.q, config.budget).has_value(), config.seed,
                i, dump);
      out.check("output-validates", validate(result.q).ok, config.seed, i, dump);
    } catch (const Error& e) {
      out.check("amalgamation-succeeds", false, config.seed, i, dump);
    }
  }
}

// ----------------------------------------------------------------- projection

void suite_projection(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::ConditionGenConfig cg;
    cg.alpha = config.alpha;
    cg.window_size = 12;
    cg.stem_coords = 1;
    cg.run_min = 3;
    cg.run_max = 4;
    cg.min_n = 2;
    TruncatedCondition p = gen::random_condition(rng, cg);
    auto dump = [&] { return to_json(p); };

    // Embed a creature-aligned prefix of the window.
    std::size_t keep_creatures = 1 + rng.below(p.creatures.size());
    Coord cut_at = p.creatures[keep_creatures - 1].z().max() + 1;
    CoordMap pi = CoordMap::shift(Window::interval(0, cut_at), 0);
    if (!aligned_with(p, pi)) continue;

    TruncatedCondition proj = project_condition(p, pi);
    out.check("projection-validates", validate(proj).ok, config.seed, i, dump);

    // POS of the projection is exactly the coordinate image of POS(p).
    bool image_ok = true;
    {
      std::vector<std::vector<Symbol>> image;
      PointEnumerator points(p.alpha, p.window, config.budget);
      std::vector<Symbol> x;
      while (points.next(x)) {
        if (!pos_member(p, x)) continue;
        std::vector<Symbol> y;
        for (Coord c : proj.window.coords()) y.push_back(x[*p.window.index_of(c)]);
        image.push_back(std::move(y));
      }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      std::vector<std::vector<Symbol>> direct;
      PointEnumerator ppoints(proj.alpha, proj.window, config.budget);
      std::vector<Symbol> y;
      while (ppoints.next(y))
        if (pos_member(proj, y)) direct.push_back(y);
      image_ok = image == direct;
    }
    out.check("projection-pos-image", image_ok, config.seed, i, dump);

    // Completion recovers its source exactly and strengthens p.
    MoveCertificate cert;
    TruncatedCondition r = gen::random_strengthening(rng, proj, 2, cert, config.budget);
    if (validate(r).ok) {
      TruncatedCondition q = project_complete(p, pi, r, config.budget);
      out.check("completion-projects-back", project_condition(q, pi) == r, config.seed, i, dump);
      out.check("completion-strengthens", leq_semantic(p, q, config.budget), config.seed, i,
                dump);
    }

    // Monotonicity of the projection along certified strengthenings that
    // stay aligned.
    MoveCertificate cert2;
    TruncatedCondition q2 = gen::random_strengthening(rng, p, 2, cert2, config.budget);
    if (aligned_with(q2, pi)) {
      TruncatedCondition proj_q = project_condition(q2, pi);
      out.check("projection-monotone",
                !leq_check(p, q2, cert2, config.budget) ||
                    pos_subset(proj_q, proj, config.budget),
                config.seed, i, dump);
    }
  }
}

// ----------------------------------------------------------- order equivalence

void suite_order_equivalence(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::QGenConfig qg;
    qg.alpha = config.alpha;
    qg.window = Window::interval(0, 9);
    qg.seq = qhn::relaxed_seq(3);
    qg.stem_max = 2;
    qg.sigmas_max = 2;
    qg.sigma_pad = 1;
    qg.levels = 1;
    std::vector<qhn::QCondition> family;
    for (std::size_t k = 0; k < 6; ++k) family.push_back(gen::random_qcondition(rng, qg));
    bool equiv = true, transitive = true;
    for (const auto& a : family) {
      for (const auto& b : family) {
        bool syn = qhn::leq_syntactic(a, b);
        bool sem = qhn::qpos_subset(b, a, config.budget);
        if (syn != sem) equiv = false;
        if (!syn) continue;
        for (const auto& c : family)
          if (qhn::leq_syntactic(b, c) && !qhn::leq_syntactic(a, c)) transitive = false;
      }
    }
    out.check("syntactic-iff-semantic", equiv, config.seed, i,
              [&] { return to_json(family[0]); });
    out.check("transitive", transitive, config.seed, i, [&] { return to_json(family[0]); });
  }
}

// --------------------------------------------------------------- compatibility

void suite_compatibility(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::QGenConfig qg;
    qg.alpha = config.alpha;
    qg.window = Window::interval(0, 18);
    qg.seq = qhn::strict_seq(4);
    qg.stem_max = 2;
    qg.sigmas_max = 3;
    qg.sigma_pad = 2;
    qg.levels = 1;
    qhn::QCondition p0 = gen::random_qcondition(rng, qg);
    qhn::QCondition p1 = gen::random_qcondition(rng, qg);
    auto dump = [&] { return to_json(p0); };
    auto witness = qhn::compatible_bruteforce(p0, p1, config.budget);
    std::optional<qhn::QCondition> q;
    bool constructive_error = false;
    try {
      if (witness)
        q = qhn::compatible_constructive(p0, p1, *witness, Strictness::strict, config.budget);
    } catch (const Error&) {
      constructive_error = true;
    }
    out.check("constructive-iff-witness", !constructive_error && q.has_value() == witness.has_value(),
              config.seed, i, dump);
    if (q) {
      out.check("bound-above-both", qhn::leq_syntactic(p0, *q) && qhn::leq_syntactic(p1, *q),
                config.seed, i, dump);
      out.check("bound-validates",
                qhn::validate_qcondition(*q, Strictness::strict).ok, config.seed, i, dump);
    }
  }
}

// --------------------------------------------------------- class amalgamation

void suite_class_amalgamation(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    std::size_t n = 1 + rng.below(2);  // n in {1, 2}
    gen::QGenConfig qg;
    qg.alpha = config.alpha;
    qg.window = Window::interval(0, 220);
    qg.seq = qhn::relaxed_seq(6);
    qg.stem_max = 2;
    qg.sigmas_max = 2;
    qg.sigma_pad = 1;
    auto family = gen::random_class_family(rng, qg, n, 1 + rng.below(2));
    auto dump = [&] { return to_json(family[0]); };
    bool keys_equal = true;
    for (const auto& p : family)
      if (qhn::class_key(p, n) != qhn::class_key(family[0], n)) keys_equal = false;
    out.check("family-shares-key", keys_equal, config.seed, i, dump);
    try {
      qhn::QCondition q = qhn::amalgamate_class(family, config.strictness, config.budget);
      bool above_all = true;
      for (const auto& p : family)
        if (!qhn::leq_syntactic(p, q)) above_all = false;
      out.check("amalgam-above-all", above_all, config.seed, i, dump);
      out.check("amalgam-validates",
                qhn::validate_qcondition(q, Strictness::relaxed).ok, config.seed, i, dump);
      out.check("amalgam-m-star", q.m_star == family[0].m_star + n + 2, config.seed, i, dump);
    } catch (const Error&) {
      out.check("amalgam-succeeds", false, config.seed, i, dump);
    }
  }
}

// ----------------------------------------------------------------- normal form

void suite_normal_form(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::QGenConfig qg;
    qg.alpha = config.alpha;
    qg.window = Window::interval(0, 24);
    qg.seq = qhn::relaxed_seq(4);
    qg.stem_max = 2;
    qg.sigmas_max = 3;
    qg.sigma_pad = 3;
    qg.levels = 2;
    qhn::QCondition p = gen::random_qcondition(rng, qg);
    auto dump = [&] { return to_json(p); };
    qhn::QCondition q = qhn::normalize_dense(p, Strictness::relaxed);
    out.check("normal-form-above", qhn::leq_syntactic(p, q), config.seed, i, dump);
    bool sizes_exact = true;
    for (std::size_t k = 0; k < q.blocks.size(); ++k) {
      BigInt target = q.seq.n0(q.m_star + k) / big_pow(2, q.m_star) + 1;
      for (std::size_t j : q.blocks[k])
        if (BigInt(q.sigmas[j].size()) != target) sizes_exact = false;
    }
    out.check("normal-form-sizes", sizes_exact, config.seed, i, dump);
    out.check("normal-form-idempotent", qhn::normalize_dense(q, Strictness::relaxed) == q,
              config.seed, i, dump);
  }
}

// --------------------------------------------------------------- nowhere dense

void suite_nowhere_dense(const SuiteConfig& config, Collector& out) {
  for (std::size_t i = 0; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    gen::QGenConfig qg;
    qg.alpha = config.alpha;
    qg.window = Window::interval(0, 8);
    qg.seq = qhn::relaxed_seq(2);
    qg.stem_max = 1;
    qg.sigmas_max = 2;
    qg.sigma_pad = 1;
    qhn::QCondition p = gen::random_qcondition(rng, qg);
    auto dump = [&] { return to_json(p); };
    std::size_t extra = 1 + rng.below(2);
    auto report = qhn::nowhere_dense_check(p, extra);

    // Enumeration oracle: a stem domain containing dom(w) with at most
    // `extra` added coordinates whose cylinder sits inside POS.
    bool interior_found = false;
    Window base = p.w.domain();
    Window free = p.window.minus(base);
    std::vector<Coord> pool = free.coords();
    std::function<void(std::size_t, std::vector<Coord>&)> rec = [&](std::size_t start,
                                                                    std::vector<Coord>& acc) {
      if (interior_found) return;
      if (acc.size() <= extra) {
        std::vector<Coord> cs = base.coords();
        cs.insert(cs.end(), acc.begin(), acc.end());
        Window dom(cs);
        PointEnumerator stems(p.alpha, dom, config.budget);
        std::vector<Symbol> sv;
        while (stems.next(sv) && !interior_found) {
          PartialFunction stem = assignment_to_pf(dom, sv);
          if (!p.w.subfunction_of(stem)) continue;
          bool inside = true;
          PointEnumerator points(p.alpha, p.window, config.budget);
          std::vector<Symbol> x;
          while (points.next(x)) {
            bool extends_stem = true;
            for (const auto& [c, s] : stem.entries())
              if (x[*p.window.index_of(c)] != s) {
                extends_stem = false;
                break;
              }
            if (extends_stem && !qpos_member(p, x)) {
              inside = false;
              break;
            }
          }
          if (inside) interior_found = true;
        }
      }
      if (acc.size() == extra) return;
      for (std::size_t k = start; k < pool.size(); ++k) {
        acc.push_back(pool[k]);
        rec(k + 1, acc);
        acc.pop_back();
      }
    };
    std::vector<Coord> acc;
    rec(0, acc);
    out.check("matches-interior-check", report.nowhere_dense == !interior_found, config.seed, i,
              dump);
  }
}

// -------------------------------------------------------------- null refinement

void suite_null_refinement(const SuiteConfig& config, Collector& out) {
  if (skip_instance(config, 0)) return;
  // One desk-scale instance: the growth clause forces the fresh family's
  // size, so the window is large while all checks stay structural.
  Alphabet alpha = Alphabet::cyclic(2);
  std::vector<std::pair<BigInt, BigInt>> levels;
  for (std::size_t m = 0; m < 6; ++m) levels.emplace_back(m + 1, m + 1);
  levels.emplace_back(7, 16385);  // n1 > 2^{2*7}
  qhn::NormSeqPrefix seq{std::move(levels)};
  Window window = Window::interval(0, 120000);
  qhn::QCondition p = qhn::make_qcondition(
      alpha, window, PartialFunction({{0, 1}}),
      {PartialFunction({{1, 0}, {2, 0}})}, 0, {{0}}, seq);
  auto dump = [&] { return to_json(p); };
  qhn::NullRefinement refined = qhn::null_refinement(p, Strictness::relaxed);
  out.check("refinement-validates",
            qhn::validate_qcondition(refined.q, Strictness::relaxed).ok, config.seed, 0, dump);
  out.check("bounds-certified", refined.bound_certified, config.seed, 0, dump);
  bool measures_match = true;
  for (std::size_t b = 0; b < refined.block_measures.size(); ++b) {
    std::size_t m = refined.q.m_star + b;
    Rational expect = block_avoid_measure(alpha, seq.n0(m).convert_to<std::uint64_t>(),
                                          seq.n1(m).convert_to<std::uint64_t>());
    if (refined.block_measures[b] != expect) measures_match = false;
  }
  out.check("block-measures-exact", measures_match, config.seed, 0, dump);

  // Explicit joint witness: conflict every cylinder of p and of the
  // refinement at one coordinate each (all domains are pairwise disjoint).
  std::vector<Symbol> x(window.size(), 0);
  for (const auto& [c, s] : p.w.entries()) x[*window.index_of(c)] = s;
  for (const auto& sigma : p.sigmas) {
    Coord c = sigma.domain().min();
    x[*window.index_of(c)] = sigma.value_at(c) == 0 ? 1 : 0;
  }
  for (const auto& sigma : refined.q.sigmas) {
    Coord c = sigma.domain().min();
    x[*window.index_of(c)] = sigma.value_at(c) == 0 ? 1 : 0;
  }
  out.check("compatible-with-input", qhn::qpos_member(p, x) && qhn::qpos_member(refined.q, x),
            config.seed, 0, dump);
}

// --------------------------------------------------------------- measure bounds

void suite_measure_bounds(const SuiteConfig& config, Collector& out) {
  // Fixture: sixty-four disjoint 3-coordinate cylinders over Z_2.
  if (!skip_instance(config, 0)) {
    Alphabet alpha = Alphabet::cyclic(2);
    Rational value = block_avoid_measure(alpha, 3, 64);
    Rational direct = rational_pow(Rational(7, 8), 64);
    out.check("fixture-exact", value == direct, config.seed, 0);
    out.check("fixture-below-bound", certified_at_most_exp_neg(value, 8), config.seed, 0);
    auto interval = exp_neg_interval(8);
    out.check("interval-brackets",
              interval.lo > Rational(335462, 1000000000) &&
                  interval.hi < Rational(335464, 1000000000),
              config.seed, 0);
  }

  for (std::size_t i = 1; i < config.instances; ++i) {
    if (skip_instance(config, i)) continue;
    gen::Rng rng(instance_seed(config, i));
    // Generic block bound whenever the count clears |X|^{2d}.
    std::uint64_t d = 1 + rng.below(2);
    std::uint64_t threshold = 1;
    for (std::uint64_t k = 0; k < 2 * d; ++k) threshold *= config.alpha.size();
    std::uint64_t count = threshold + 1 + rng.below(8);
    std::uint64_t exponent = 1;
    for (std::uint64_t k = 0; k < d; ++k) exponent *= config.alpha.size();
    out.check("generic-block-bound",
              certified_at_most_exp_neg(block_avoid_measure(config.alpha, d, count), exponent),
              config.seed, i);

    // Inclusion-exclusion agrees with window enumeration.
    Window window = Window::interval(0, 7);
    std::size_t fam = 1 + rng.below(3);
    std::vector<PartialFunction> sigmas;
    for (std::size_t k = 0; k < fam; ++k) {
      std::size_t size = 1 + rng.below(3);
      std::vector<Coord> pool = window.coords();
      std::vector<std::pair<Coord, Symbol>> entries;
      for (std::size_t e = 0; e < size; ++e) {
        std::size_t at = rng.below(pool.size());
        entries.emplace_back(pool[at], static_cast<Symbol>(rng.below(config.alpha.size())));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
      }
      sigmas.emplace_back(std::move(entries));
    }
    Rational measure = avoid_measure(config.alpha, sigmas, config.budget);
    PointEnumerator points(config.alpha, window, config.budget);
    std::vector<Symbol> x;
    std::uint64_t hits = 0, total = 0;
    while (points.next(x)) {
      ++total;
      PartialFunction xf = assignment_to_pf(window, x);
      bool avoid = true;
      for (const auto& sigma : sigmas)
        if (sigma.subfunction_of(xf)) avoid = false;
      if (avoid) ++hits;
    }
    out.check("matches-enumeration", measure == Rational(hits, total), config.seed, i);
  }
}

using SuiteFn = void (*)(const SuiteConfig&, Collector&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"group-axioms", suite_group_axioms},
      {"pf-ops", suite_pf_ops},
      {"norm-structure", suite_norm_structure},
      {"witness", suite_witness},
      {"norm-bounds", suite_norm_bounds},
      {"sigma-axioms", suite_sigma_axioms},
      {"invariance", suite_invariance},
      {"pos-monotone", suite_pos_monotone},
      {"amalgamation", suite_amalgamation},
      {"projection", suite_projection},
      {"order-equivalence", suite_order_equivalence},
      {"compatibility", suite_compatibility},
      {"class-amalgamation", suite_class_amalgamation},
      {"normal-form", suite_normal_form},
      {"nowhere-dense", suite_nowhere_dense},
      {"null-refinement", suite_null_refinement},
      {"measure-bounds", suite_measure_bounds},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    SuiteReport report;
    report.suite = name;
    report.config = config;
    Collector collector(report);
    auto start = std::chrono::steady_clock::now();
    fn(config, collector);
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
  }
  fail(Errc::unknown_suite, "no suite named '" + name + "'");
}

std::string SuiteReport::to_json() const {
  json props = json::array();
  for (const auto& p : properties) {
    json cxs = json::array();
    for (const auto& c : p.counterexamples) cxs.push_back(json::parse(c, nullptr, false));
    props.push_back(
        {{"name", p.property}, {"pass", p.pass}, {"fail", p.fail}, {"counterexamples", cxs}});
  }
  json j{{"schema", 1},
         {"suite", suite},
         {"seed", config.seed},
         {"alphabet", json::parse(packnorm::to_json(config.alpha))},
         {"instances", config.instances},
         {"strict", config.strictness == Strictness::strict},
         {"ok", ok},
         {"properties", props},
         {"elapsed_ms", elapsed_ms}};
  return j.dump(2);
}

std::string SuiteReport::to_csv() const {
  std::string out = "suite,property,pass,fail\n";
  for (const auto& p : properties)
    out += suite + "," + p.property + "," + std::to_string(p.pass) + "," +
           std::to_string(p.fail) + "\n";
  return out;
}

}  // namespace packnorm::suites
