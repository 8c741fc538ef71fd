#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/reference.hpp"

using namespace packnorm;
using oracles::pf;
using oracles::win;

TEST_CASE("packing number of the constant family is the set size") {
  Window z = win({0, 1, 2});
  CHECK(norm_n(z, {PartialFunction::constant(z, 0)}) == 3);
}

TEST_CASE("packing number: singleton constraint on a singleton set") {
  CHECK(norm_n(win({0}), {pf({{0, 0}})}) == 1);
}

TEST_CASE("packing number: a crowding triple forces zero") {
  // The full subfamily covers two coordinates but has three members.
  std::vector<PartialFunction> delta{pf({{0, 0}}), pf({{1, 0}}), pf({{0, 0}, {1, 0}})};
  CHECK(reference::norm_by_definition(delta) == 0);
  CHECK(norm_n(win({0, 1}), delta) == 0);
}

TEST_CASE("packing number agrees with the definition-literal evaluation") {
  gen::Rng rng(20240211);
  for (int i = 0; i < 150; ++i) {
    gen::CreatureGenConfig cg;
    cg.alpha = Alphabet::cyclic(i % 2 ? 2 : 3);
    cg.coord_span = 9;
    cg.z_min = 1;
    cg.z_max = 6;
    cg.delta_min = 1;
    cg.delta_max = 6;
    cg.min_n = 0;
    Creature t = gen::random_creature(rng, cg);
    CHECK(t.n() == reference::norm_by_definition(t.delta()));
  }
}

TEST_CASE("norm budget guards the family size") {
  Window z = Window::interval(0, 14);
  std::vector<PartialFunction> delta;
  for (Coord c = 0; c < 13; ++c) delta.push_back(pf({{c, 0}}));
  CHECK_THROWS_AS(norm_n(z, delta), Error);  // default budget is 12
  Budget wide;
  wide.max_delta = 16;
  CHECK(norm_n(z, delta, wide) == 1);
}

TEST_CASE("norm thresholds compare in integer form") {
  Window z8 = Window::interval(0, 8);
  Creature t8 = Creature::make(z8, {PartialFunction::constant(z8, 0)});
  CHECK(t8.n() == 8);
  CHECK(t8.nor_real() == doctest::Approx(1.0));
  CHECK(t8.nor_at_least(Rational(1)));
  CHECK_FALSE(t8.nor_exceeds(Rational(1)));  // 8 is not > 8^1

  Window z3 = Window::interval(0, 3);
  Creature t3 = Creature::make(z3, {PartialFunction::constant(z3, 0)});
  CHECK(t3.n() == 3);
  CHECK_FALSE(t3.nor_at_least(Rational(1)));  // 3 < 8^1
  CHECK(t3.nor_exceeds(Rational(1, 2)));      // 3^2 = 9 > 8
  CHECK(t3.nor_exceeds(Rational(0)));

  Creature inf = Creature::unconstrained(z3);
  CHECK(inf.infinite_norm());
  CHECK(inf.nor_exceeds(Rational(1000)));
}

TEST_CASE("value sets enumerate the unforbidden assignments") {
  Alphabet z2 = Alphabet::cyclic(2);

  Creature t = Creature::make(win({0}), {pf({{0, 0}})});
  auto values = value_set(z2, t);
  REQUIRE(values.size() == 1);
  CHECK(values[0] == std::vector<Symbol>{1});

  Window z4 = Window::interval(0, 4);
  Creature two = Creature::make(
      z4, {PartialFunction::constant(z4, 0), PartialFunction::constant(z4, 1)});
  CHECK(value_count(z2, two) == 14);  // sixteen points minus the two constants

  Creature inf = Creature::unconstrained(z4);
  CHECK(value_count(z2, inf) == 16);
}

TEST_CASE("distinct representatives: examples and failure") {
  auto reps = sdr({pf({{0, 0}}), pf({{1, 0}})});
  CHECK(reps == std::vector<Coord>{0, 1});

  auto reps2 = sdr({pf({{0, 0}, {1, 0}}), pf({{1, 0}})});
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0] != reps2[1]);
  CHECK((reps2[0] == 0 || reps2[0] == 1));
  CHECK(reps2[1] == 1);  // the singleton domain must take its only coordinate

  CHECK_THROWS_AS(sdr({pf({{0, 0}}), pf({{0, 1}})}), Error);  // two sets, one vertex
}

TEST_CASE("witness construction lands in the value set") {
  Alphabet z2 = Alphabet::cyclic(2);
  CHECK(witness_value(z2, Creature::make(win({0}), {pf({{0, 0}})})) == pf({{0, 1}}));
  CHECK(witness_value(z2, Creature::unconstrained(win({0, 1}))) == pf({{0, 0}, {1, 0}}));

  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Alphabet alpha = Alphabet::cyclic(i % 2 ? 2 : 3);
    gen::CreatureGenConfig cg;
    cg.alpha = alpha;
    cg.coord_span = 8;
    cg.z_max = 6;
    cg.delta_max = 5;
    cg.min_n = 1;
    Creature t = gen::random_creature(rng, cg);
    PartialFunction w = witness_value(alpha, t);
    CHECK(value_member_pf(t, w));
    // Against the exhaustive value set as well.
    auto values = value_set(alpha, t);
    bool found = false;
    for (const auto& x : values)
      if (assignment_to_pf(t.z(), x) == w) found = true;
    CHECK(found);
  }
}

TEST_CASE("positive packing number forces a nonempty value set") {
  gen::Rng rng(99);
  for (int i = 0; i < 120; ++i) {
    gen::CreatureGenConfig cg;
    cg.alpha = Alphabet::cyclic(i % 2 ? 2 : 3);
    cg.coord_span = 7;
    cg.z_max = 5;
    cg.delta_max = 5;
    cg.min_n = 1;
    Creature t = gen::random_creature(rng, cg);
    CHECK(value_count(cg.alpha, t) > 0);
  }
}

TEST_CASE("antitone norm and the domain-size upper bound") {
  gen::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    gen::CreatureGenConfig cg;
    cg.alpha = Alphabet::cyclic(2);
    cg.coord_span = 5;
    cg.z_min = 2;
    cg.z_max = 5;
    cg.delta_min = 2;
    cg.delta_max = 5;
    cg.min_n = 0;
    Creature t = gen::random_creature(rng, cg);
    std::size_t min_dom = t.z().size();
    for (const auto& eta : t.delta()) min_dom = std::min(min_dom, eta.size());
    CHECK(t.n() <= min_dom);
    // Removing constraints can only raise the packing number.
    for (std::size_t drop = 0; drop < t.delta().size(); ++drop) {
      std::vector<PartialFunction> fewer;
      for (std::size_t k = 0; k < t.delta().size(); ++k)
        if (k != drop) fewer.push_back(t.delta()[k]);
      if (!fewer.empty()) CHECK(norm_n(t.z(), fewer) >= t.n());
    }
  }
}
