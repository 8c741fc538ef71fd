#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/qhn_compat.hpp"

using namespace packnorm;
using namespace packnorm::qhn;
using oracles::pf;
using oracles::win;

namespace {

NormSeqPrefix seq_of(std::vector<std::pair<long, long>> raw) {
  std::vector<std::pair<BigInt, BigInt>> levels;
  for (auto [a, b] : raw) levels.emplace_back(a, b);
  return NormSeqPrefix(std::move(levels));
}

}  // namespace

TEST_CASE("brute-force compatibility") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 8);
  auto seq = strict_seq(4);
  QCondition p = make_qcondition(z2, window, pf({{0, 1}}),
                                 {pf({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}})}, 0, {{0}}, seq);
  REQUIRE(validate_qcondition(p, Strictness::strict).ok);

  auto self_witness = compatible_bruteforce(p, p);
  REQUIRE(self_witness.has_value());
  CHECK(qpos_member(p, *self_witness));

  QCondition clash = make_qcondition(z2, window, pf({{0, 0}}), {}, 0, {}, seq);
  CHECK_FALSE(compatible_bruteforce(p, clash).has_value());

  QCondition disjoint = make_qcondition(z2, window, pf({{6, 1}}),
                                        {}, 0, {}, seq);
  CHECK(compatible_bruteforce(p, disjoint).has_value());
}

TEST_CASE("hall selection produces disjoint sets of the requested sizes") {
  auto picks = hall_select_u({{win({0, 1, 2, 3}), 2}});
  REQUIRE(picks.size() == 1);
  CHECK(picks[0].size() == 2);
  CHECK(picks[0].subset_of(win({0, 1, 2, 3})));

  // Two identical 4-element domains, two coordinates each.
  auto two = hall_select_u({{win({0, 1, 2, 3}), 2}, {win({0, 1, 2, 3}), 2}});
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 2);
  CHECK(two[1].size() == 2);
  CHECK(Window::disjoint(two[0], two[1]));

  // Demanding more representatives than coordinates fails.
  CHECK_THROWS_AS(hall_select_u({{win({0, 1}), 2}, {win({0, 1}), 2}}), Error);
}

TEST_CASE("constructive compatibility from a shared point, strict mode") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 16);
  auto seq = strict_seq(4);
  QCondition p0 = make_qcondition(z2, window, pf({{0, 1}}),
                                  {pf({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}})}, 0, {{0}}, seq);
  QCondition p1 = make_qcondition(z2, window, pf({{6, 0}}),
                                  {pf({{7, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 1}})}, 0, {{0}},
                                  seq);
  auto witness = compatible_bruteforce(p0, p1);
  REQUIRE(witness.has_value());
  QCondition q = compatible_constructive(p0, p1, *witness, Strictness::strict);
  CHECK(leq_syntactic(p0, q));
  CHECK(leq_syntactic(p1, q));
  CHECK(validate_qcondition(q, Strictness::strict).ok);
  CHECK(q.m_star == 3);
  CHECK(qpos_example(q).has_value());

  // The prefix must reach the chosen level.
  auto short_seq = strict_seq(3);
  QCondition s0 = make_qcondition(z2, window, pf({{0, 1}}), {}, 0, {}, short_seq);
  QCondition s1 = make_qcondition(z2, window, pf({{1, 1}}), {}, 0, {}, short_seq);
  auto w2 = compatible_bruteforce(s0, s1);
  REQUIRE(w2.has_value());
  CHECK_THROWS_AS(compatible_constructive(s0, s1, *w2, Strictness::strict), Error);
}

TEST_CASE("constructive compatibility exercises the selection path") {
  // Relaxed prefix with a jump at level 3, so the pinned-set clause holds
  // while high-level constraints must shrink and select.
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 60);
  auto seq = seq_of({{2, 2}, {3, 3}, {4, 4}, {40, 40}});
  std::vector<std::pair<Coord, Symbol>> entries;
  for (Coord c = 10; c < 50; ++c) entries.emplace_back(c, 0);
  PartialFunction sigma(entries);
  QCondition p = make_qcondition(z2, window, PartialFunction{}, {sigma}, 0, {{}, {}, {}, {0}},
                                 seq);
  REQUIRE(validate_qcondition(p, Strictness::relaxed).ok);

  // A point violating the constraint at its last coordinate only.
  std::vector<Symbol> eta(window.size(), 0);
  eta[*window.index_of(49)] = 1;
  REQUIRE(qpos_member(p, eta));

  QCondition q = compatible_constructive(p, p, eta, Strictness::relaxed);
  CHECK(leq_syntactic(p, q));
  CHECK(validate_qcondition(q, Strictness::relaxed).ok);
  CHECK(q.m_star == 3);
  REQUIRE(q.sigmas.size() == 2);  // one selection per input occurrence
  CHECK(Window::disjoint(q.sigmas[0].domain(), q.sigmas[1].domain()));
  for (const auto& s : q.sigmas) {
    CHECK(s.subfunction_of(sigma));
    CHECK(BigInt(s.size()) * 8 >= 40);  // level-3 size demand at m* = 3
  }
  // The deterministic selection keeps low coordinates, so the witness
  // itself extends a selected sub-constraint and leaves POS(q).
  CHECK_FALSE(qpos_member(q, eta));
}

TEST_CASE("class keys and class amalgamation") {
  gen::Rng rng(777);
  gen::QGenConfig qg;
  qg.alpha = Alphabet::cyclic(2);
  qg.window = Window::interval(0, 220);
  qg.seq = relaxed_seq(6);
  qg.stem_max = 2;
  qg.sigmas_max = 2;
  qg.sigma_pad = 1;

  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    auto family = gen::random_class_family(rng, qg, n, 1);
    REQUIRE(family.size() == n + 1);
    for (const auto& p : family) CHECK(class_key(p, n) == class_key(family[0], n));
    QCondition q = amalgamate_class(family, Strictness::relaxed);
    for (const auto& p : family) CHECK(leq_syntactic(p, q));
    CHECK(q.m_star == family[0].m_star + n + 2);
    CHECK(validate_qcondition(q, Strictness::relaxed).ok);
  }

  // Key mismatch: different stems.
  auto family = gen::random_class_family(rng, qg, 1, 1);
  QCondition other = family[1];
  other.w = pf({{219, 1}});
  CHECK_THROWS_AS(amalgamate_class({family[0], other}, Strictness::relaxed), Error);
}

TEST_CASE("single-condition class amalgamation strengthens its input") {
  gen::Rng rng(778);
  gen::QGenConfig qg;
  qg.alpha = Alphabet::cyclic(2);
  qg.window = Window::interval(0, 120);
  qg.seq = relaxed_seq(5);
  qg.stem_max = 1;
  qg.sigmas_max = 1;
  auto family = gen::random_class_family(rng, qg, 0, 2);
  QCondition q = amalgamate_class(family, Strictness::relaxed);
  CHECK(leq_syntactic(family[0], q));
  CHECK(q.m_star == family[0].m_star + 2);
}
