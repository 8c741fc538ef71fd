#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/json_io.hpp"

using namespace packnorm;
using oracles::pf;
using oracles::win;

namespace {

// Stem on {0}, two constant-constraint creatures covering [1, 6).
TruncatedCondition small_condition(Flavor flavor = Flavor::q_plus_infinity) {
  Alphabet alpha = Alphabet::cyclic(2);
  Window window = Window::interval(0, 6);
  Window z0 = Window::interval(1, 3);
  Window z1 = Window::interval(3, 6);
  return make_condition(alpha, window, pf({{0, 1}}),
                        {Creature::make(z0, {PartialFunction::constant(z0, 0)}),
                         Creature::make(z1, {PartialFunction::constant(z1, 1)})},
                        flavor);
}

}  // namespace

TEST_CASE("validation checks the window partition and the flavor") {
  TruncatedCondition p = small_condition();
  CHECK(validate(p).ok);

  // Overlapping creatures.
  Window z = Window::interval(1, 4);
  TruncatedCondition bad = p;
  bad.creatures.push_back(Creature::make(z, {PartialFunction::constant(z, 0)}));
  CHECK_FALSE(validate(bad).ok);

  // Unconstrained creatures are fine in the base flavor only.
  Window z5 = Window::interval(1, 6);
  TruncatedCondition free_cond =
      make_condition(p.alpha, p.window, p.w, {Creature::unconstrained(z5)}, Flavor::q_empty);
  CHECK(validate(free_cond).ok);
  free_cond.flavor = Flavor::q_plus_infinity;
  CHECK_FALSE(validate(free_cond).ok);

  // Missing coverage.
  TruncatedCondition gap = make_condition(p.alpha, p.window, p.w, {p.creatures[0]}, p.flavor);
  CHECK_FALSE(validate(gap).ok);

  // Profile bounds: each slot must be strictly exceeded.
  TruncatedCondition profiled = p;
  profiled.bound_profile = {Rational(0), Rational(0)};
  CHECK(validate(profiled).ok);
  profiled.bound_profile = {Rational(0), Rational(2)};  // n = 3 is not > 8^2
  CHECK_FALSE(validate(profiled).ok);
}

TEST_CASE("POS membership and the cylinder product count") {
  TruncatedCondition p = small_condition();
  // x must extend the stem.
  std::vector<Symbol> x(6, 0);
  CHECK_FALSE(pos_member(p, x));
  x[0] = 1;
  CHECK_FALSE(pos_member(p, x));  // first creature forbids all-zero
  x[1] = 1;
  x[3] = 0;
  CHECK(pos_member(p, x));

  // |POS| = prod |value sets| once the stem is fixed.
  CHECK(pos_count(p) == 3u * 7u);

  TruncatedCondition free_cond =
      make_condition(p.alpha, p.window, p.w,
                     {Creature::unconstrained(Window::interval(1, 6))}, Flavor::q_empty);
  CHECK(pos_count(free_cond) == 32);

  gen::Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    gen::ConditionGenConfig cg;
    cg.alpha = Alphabet::cyclic(2);
    cg.window_size = 12;
    cg.stem_coords = 1 + rng.below(2);
    cg.min_n = 1;
    TruncatedCondition q = gen::random_condition(rng, cg);
    std::uint64_t expected = 1;
    for (const auto& t : q.creatures) expected *= value_count(q.alpha, t);
    CHECK(pos_count(q) == expected);
  }
}

TEST_CASE("deciding the value removes creatures against their value sets") {
  TruncatedCondition p = small_condition();

  // The empty decision is the identity.
  TruncatedCondition same = apply_move(p, DecideMove{{}, p.w});
  CHECK(same == p);

  // Deciding into the value set works and drops the creature.
  PartialFunction w_star = pf_union(p.w, pf({{1, 0}, {2, 1}}));
  TruncatedCondition decided = apply_move(p, DecideMove{{0}, w_star});
  CHECK(decided.creatures.size() == 1);
  CHECK(decided.w == w_star);
  CHECK(validate(decided).ok);

  // Deciding onto a forbidden cylinder is illegal.
  PartialFunction bad = pf_union(p.w, pf({{1, 0}, {2, 0}}));
  CHECK_THROWS_AS(apply_move(p, DecideMove{{0}, bad}), Error);

  // Deciding an unconstrained creature is always legal.
  TruncatedCondition free_cond =
      make_condition(p.alpha, p.window, p.w,
                     {Creature::unconstrained(Window::interval(1, 6))}, Flavor::q_empty);
  PartialFunction all = pf_union(p.w, PartialFunction::constant(Window::interval(1, 6), 0));
  TruncatedCondition done = apply_move(free_cond, DecideMove{{0}, all});
  CHECK(done.creatures.empty());

  // Stem domain must be exactly the old stem plus the decided creatures.
  CHECK_THROWS_AS(apply_move(p, DecideMove{{0}, pf_union(p.w, pf({{1, 0}}))}), Error);
}

TEST_CASE("composing and decomposing moves") {
  TruncatedCondition p = small_condition();

  // Identity composition.
  SigmaMove identity{{SigmaGroup{{0}, p.creatures[0]}, SigmaGroup{{1}, p.creatures[1]}}};
  CHECK(apply_move(p, identity) == p);

  // Composing the two creatures into their union.
  Creature glued = glue({p.creatures[0], p.creatures[1]});
  TruncatedCondition merged = apply_move(p, SigmaMove{{SigmaGroup{{0, 1}, glued}}});
  CHECK(merged.creatures.size() == 1);
  CHECK(validate(merged).ok);

  // A replacement missing a member constraint is illegal.
  Creature wrong = Creature::make(glued.z(), {p.creatures[0].delta().front()});
  CHECK_THROWS_AS(apply_move(p, SigmaMove{{SigmaGroup{{0, 1}, wrong}}}), Error);

  // Identity decomposition.
  CHECK(apply_move(p, SigmaBotMove{0, {p.creatures[0]}}) == p);

  // Splitting along a cut; the two-coordinate constant creature cuts into
  // two finite-norm singletons.
  auto [s0, s1] = cut(p.creatures[0], win({1}));
  TruncatedCondition split = apply_move(p, SigmaBotMove{0, {s0, s1}});
  CHECK(split.creatures.size() == 3);
  CHECK(validate(split).ok);

  // Cutting the three-coordinate creature strands its short side without
  // constraints, which the finite-norm flavor rejects.
  auto [t0, t1] = cut(p.creatures[1], win({3}));
  CHECK(t0.infinite_norm());
  TruncatedCondition stranded = apply_move(p, SigmaBotMove{1, {t0, t1}});
  CHECK_FALSE(validate(stranded).ok);

  // Pieces that do not partition are illegal.
  CHECK_THROWS_AS(apply_move(p, SigmaBotMove{0, {p.creatures[1]}}), Error);
}

TEST_CASE("certificates replay and imply semantic containment") {
  TruncatedCondition p = small_condition();
  CHECK(leq_check(p, p, MoveCertificate{}));  // reflexivity via the empty certificate

  gen::Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    gen::ConditionGenConfig cg;
    cg.alpha = Alphabet::cyclic(2);
    cg.window_size = 12;
    cg.stem_coords = 1;
    cg.min_n = 2;
    TruncatedCondition base = gen::random_condition(rng, cg);
    MoveCertificate cert;
    TruncatedCondition strong = gen::random_strengthening(rng, base, 3, cert);
    CHECK(leq_check(base, strong, cert));
    CHECK(leq_semantic(base, strong));
    CHECK(validate(strong).ok);
  }
}

TEST_CASE("bounded search finds constructed orderings and rejects non-orderings") {
  TruncatedCondition p = small_condition();

  // A target reached by one composition move.
  Creature glued = glue({p.creatures[0], p.creatures[1]});
  TruncatedCondition q = apply_move(p, SigmaMove{{SigmaGroup{{0, 1}, glued}}});
  auto found = leq_bounded_search(p, q, 2);
  REQUIRE(found.has_value());
  CHECK(leq_check(p, q, *found));

  // Incomparable conditions: different stems, no containment either way.
  TruncatedCondition other = p;
  other.w = pf({{0, 0}});
  CHECK_FALSE(leq_semantic(p, other));
  CHECK_FALSE(leq_bounded_search(p, other, 3).has_value());

  // A semantically larger POS admits no certificate.
  TruncatedCondition weaker =
      make_condition(p.alpha, p.window, p.w,
                     {Creature::unconstrained(Window::interval(1, 6))}, p.flavor);
  CHECK_FALSE(leq_semantic(p, weaker));
  CHECK_FALSE(leq_bounded_search(p, weaker, 3).has_value());
}

TEST_CASE("window automorphisms transport POS pointwise") {
  TruncatedCondition p = small_condition();
  gen::Rng rng(3);
  std::vector<std::pair<Coord, Symbol>> ventries;
  for (Coord c : p.window.coords())
    ventries.emplace_back(c, static_cast<Symbol>(rng.below(p.alpha.size())));
  PartialFunction v(ventries);
  TruncatedCondition shifted = translate_condition(p, v);
  CHECK(validate(shifted).ok);
  auto base = oracles::pos_points(p);
  auto moved = oracles::pos_points(shifted);
  std::vector<std::vector<Symbol>> expected;
  for (const auto& x : base) {
    std::vector<Symbol> y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      y[k] = p.alpha.add(x[k], v.value_at(p.window.coords()[k]));
    expected.push_back(y);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(moved.begin(), moved.end());
  CHECK(moved == expected);

  CoordMap shift = CoordMap::shift(p.window, 10);
  TruncatedCondition relabeled = permute_condition(p, shift);
  CHECK(validate(relabeled).ok);
  CHECK(pos_count(relabeled) == pos_count(p));
}

TEST_CASE("condition json round trip is canonical") {
  TruncatedCondition p = small_condition();
  std::string text = to_json(p);
  CHECK(to_json(condition_from_json(text)) == text);

  MoveCertificate cert;
  cert.moves.emplace_back(DecideMove{{0}, pf_union(p.w, pf({{1, 0}, {2, 1}}))});
  cert.moves.emplace_back(SigmaBotMove{0, {p.creatures[1]}});
  std::string cert_text = to_json(p.alpha, cert);
  CHECK(to_json(p.alpha, certificate_from_json(p.alpha, cert_text)) == cert_text);
}
