#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/json_io.hpp"
#include "packnorm/rational.hpp"

using namespace packnorm;
using oracles::pf;
using oracles::win;

TEST_CASE("group addition is componentwise modular") {
  Alphabet z2 = Alphabet::cyclic(2);
  CHECK(z2.add(1, 1) == 0);
  CHECK(z2.add(0, 1) == 1);

  Alphabet z3z2({3, 2});
  Symbol a = z3z2.from_components({2, 1});
  CHECK(z3z2.components(z3z2.add(a, a)) == std::vector<std::uint32_t>{1, 0});

  CHECK_THROWS_AS(z2.add(2, 0), Error);
  CHECK_THROWS_AS(Alphabet({1}), Error);      // |X| >= 2
  CHECK_THROWS_AS(Alphabet({}), Error);
}

TEST_CASE("group axioms hold exhaustively for small alphabets") {
  for (const auto& orders :
       std::vector<std::vector<std::uint32_t>>{{2}, {5}, {12}, {2, 3}, {2, 2, 3}}) {
    Alphabet alpha(orders);
    for (Symbol a = 0; a < alpha.size(); ++a) {
      CHECK(alpha.add(a, 0) == a);
      CHECK(alpha.add(a, alpha.neg(a)) == 0);
      for (Symbol b = 0; b < alpha.size(); ++b) {
        CHECK(alpha.add(a, b) == alpha.add(b, a));
        for (Symbol c = 0; c < alpha.size(); ++c)
          CHECK(alpha.add(alpha.add(a, b), c) == alpha.add(a, alpha.add(b, c)));
      }
    }
  }
}

TEST_CASE("pf_union merges compatible maps and rejects conflicts") {
  CHECK(pf_union(pf({{0, 1}}), pf({{1, 0}})) == pf({{0, 1}, {1, 0}}));
  CHECK(pf_union(pf({{0, 1}}), pf({{0, 1}})) == pf({{0, 1}}));
  CHECK_THROWS_AS(pf_union(pf({{0, 1}}), pf({{0, 0}})), Error);
}

TEST_CASE("translate_pf adds pointwise over the covering vector") {
  Alphabet z2 = Alphabet::cyclic(2);
  CHECK(translate_pf(z2, pf({{0, 1}}), pf({{0, 1}})) == pf({{0, 0}}));
  CHECK(translate_pf(z2, pf({{0, 1}, {2, 0}}), pf({{0, 0}, {1, 1}, {2, 1}})) ==
        pf({{0, 1}, {2, 1}}));
  CHECK_THROWS_AS(translate_pf(z2, pf({{0, 1}}), pf({{1, 1}})), Error);
}

TEST_CASE("translate round-trips through the negated vector") {
  for (auto orders : std::vector<std::vector<std::uint32_t>>{{2}, {3}}) {
    Alphabet alpha(orders);
    Window z = win({0, 1, 2});
    PointEnumerator etas(alpha, z, Budget{});
    std::vector<Symbol> ev;
    while (etas.next(ev)) {
      PartialFunction eta = assignment_to_pf(z, ev);
      PointEnumerator vs(alpha, z, Budget{});
      std::vector<Symbol> vv;
      while (vs.next(vv)) {
        PartialFunction v = assignment_to_pf(z, vv);
        CHECK(translate_pf(alpha, translate_pf(alpha, eta, v), negate_pf(alpha, v)) == eta);
      }
    }
  }
}

TEST_CASE("permute_pf relabels injectively") {
  CHECK(permute_pf(pf({{0, 1}}), CoordMap({{0, 5}})) == pf({{5, 1}}));
  PartialFunction eta = pf({{0, 1}, {3, 0}});
  CHECK(permute_pf(eta, CoordMap::identity(win({0, 3}))) == eta);
  CoordMap shift = CoordMap::shift(win({0, 3}), 4);
  CHECK(permute_pf(permute_pf(eta, shift), shift.inverse()) == eta);
  CHECK_THROWS_AS(permute_pf(eta, CoordMap({{0, 5}})), Error);  // 3 uncovered
  CHECK_THROWS_AS(CoordMap({{0, 5}, {1, 5}}), Error);           // not injective
}

TEST_CASE("point enumeration is exact, distinct, and budget-guarded") {
  Alphabet z2 = Alphabet::cyclic(2);
  Alphabet z3 = Alphabet::cyclic(3);

  PointEnumerator single(z2, win({0}), Budget{});
  std::vector<Symbol> x;
  std::size_t count = 0;
  while (single.next(x)) ++count;
  CHECK(count == 2);

  PointEnumerator empty(z2, win({}), Budget{});
  count = 0;
  while (empty.next(x)) {
    CHECK(x.empty());
    ++count;
  }
  CHECK(count == 1);  // exactly the empty assignment

  std::vector<std::vector<Symbol>> seen;
  PointEnumerator cube(z3, win({0, 1, 2}), Budget{});
  while (cube.next(x)) seen.push_back(x);
  CHECK(seen.size() == 27);
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

  Budget tight;
  tight.max_points = 16;
  CHECK_THROWS_AS(PointEnumerator(z2, Window::interval(0, 5), tight), Error);
}

TEST_CASE("rationals: certified e^{-n} brackets and rendering") {
  auto interval = exp_neg_interval(8);
  CHECK(interval.lo > Rational(335462, 1000000000));
  CHECK(interval.hi < Rational(335464, 1000000000));
  CHECK(interval.lo < interval.hi);

  CHECK(certified_at_most_exp_neg(Rational(1, 3000), 8));
  CHECK_FALSE(certified_at_most_exp_neg(Rational(1, 2000), 8));

  CHECK(rational_to_decimal(Rational(7, 8), 3) == "0.875");
  CHECK(rational_to_decimal(Rational(-1, 4), 2) == "-0.25");
  CHECK(rational_from_string("7/8") == Rational(7, 8));
  CHECK(rational_to_string(Rational(14, 16)) == "7/8");  // reduced form
}

TEST_CASE("json round trips are canonical") {
  Alphabet alpha({3, 2});
  std::string a_text = to_json(alpha);
  CHECK(to_json(alphabet_from_json(a_text)) == a_text);

  PartialFunction eta = pf({{4, alpha.from_components({2, 1})}, {1, 0}});
  std::string pf_text = to_json(alpha, eta);
  CHECK(to_json(alpha, pf_from_json(alpha, pf_text)) == pf_text);

  Creature t = Creature::make(win({1, 4}), {eta});
  std::string c_text = to_json(alpha, t);
  CHECK(to_json(alpha, creature_from_json(alpha, c_text)) == c_text);
}
