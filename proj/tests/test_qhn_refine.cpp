#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/qhn_refine.hpp"

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

TEST_CASE("dense normal form shrinks to the exact size") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 12);
  auto seq = seq_of({{2, 4}});
  // Target size at level 0 with m* = 0 is floor(2/1)+1 = 3.
  QCondition p = make_qcondition(z2, window, pf({{0, 1}}),
                                 {pf({{1, 0}, {2, 0}, {3, 0}, {4, 0}}),
                                  pf({{5, 1}, {6, 1}, {7, 1}})},
                                 0, {{0, 1}}, seq);
  QCondition q = normalize_dense(p, Strictness::relaxed);
  CHECK(leq_syntactic(p, q));
  for (const auto& sigma : q.sigmas) CHECK(sigma.size() == 3);
  CHECK(normalize_dense(q, Strictness::relaxed) == q);  // fixed point

  // A sigma at the exact minimum integer size is decided away.
  QCondition tight = make_qcondition(z2, window, PartialFunction{},
                                     {pf({{1, 0}, {2, 0}})}, 0, {{0}}, seq);
  QCondition decided = normalize_dense(tight, Strictness::relaxed);
  CHECK(leq_syntactic(tight, decided));
  CHECK(decided.sigmas.empty());
  CHECK(decided.w.defined(1));
  CHECK(decided.w.value_at(1) != 0);
}

TEST_CASE("null refinement demands the growth witness") {
  Alphabet z2 = Alphabet::cyclic(2);
  QCondition p = make_qcondition(z2, Window::interval(0, 20), pf({{0, 1}}), {}, 0, {},
                                 relaxed_seq(4));
  CHECK_THROWS_AS(null_refinement(p, Strictness::relaxed), Error);
}

TEST_CASE("null refinement fills the tail levels with certified blocks") {
  Alphabet z2 = Alphabet::cyclic(2);
  std::vector<std::pair<BigInt, BigInt>> levels;
  for (std::size_t m = 0; m < 6; ++m) levels.emplace_back(m + 1, m + 1);
  levels.emplace_back(7, 16385);
  NormSeqPrefix seq{std::move(levels)};
  Window window = Window::interval(0, 120000);
  QCondition p = make_qcondition(z2, window, pf({{0, 1}}), {pf({{1, 0}, {2, 0}})}, 0, {{0}},
                                 seq);
  NullRefinement refined = null_refinement(p, Strictness::relaxed);
  CHECK(refined.q.m_star == 6);
  REQUIRE(refined.q.blocks.size() == 1);
  CHECK(refined.q.blocks[0].size() == 16385);
  CHECK(refined.bound_certified);
  CHECK(refined.bound_exponents == std::vector<std::uint64_t>{128});
  CHECK(refined.block_measures[0] == block_avoid_measure(z2, 7, 16385));
  CHECK(refined.total_measure == refined.block_measures[0]);
  // Fresh domains avoid the stem and the low-level material.
  for (std::size_t j : refined.q.blocks[0]) {
    CHECK(Window::disjoint(refined.q.sigmas[j].domain(), p.w.domain()));
    CHECK(Window::disjoint(refined.q.sigmas[j].domain(), p.sigmas[0].domain()));
  }
  // A window too small to host the family.
  QCondition cramped = make_qcondition(z2, Window::interval(0, 1000), pf({{0, 1}}), {}, 0, {},
                                       seq);
  CHECK_THROWS_AS(null_refinement(cramped, Strictness::relaxed), Error);
}

TEST_CASE("nowhere density at the truncation") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 8);
  auto seq = seq_of({{2, 8}});

  // Plenty of fresh constraints: every small stem has an escape.
  QCondition rich = make_qcondition(
      z2, window, pf({{0, 1}}),
      {pf({{1, 0}, {2, 0}}), pf({{3, 0}, {4, 0}}), pf({{5, 0}, {6, 0}})}, 0, {{0, 1, 2}}, seq);
  auto report = nowhere_dense_check(rich, 1);
  CHECK(report.nowhere_dense);
  CHECK(report.fresh_sigma.has_value());

  // No constraints at all: POS is a full cylinder.
  QCondition bare = make_qcondition(z2, window, pf({{0, 1}}), {}, 0, {}, seq);
  auto bare_report = nowhere_dense_check(bare, 2);
  CHECK_FALSE(bare_report.nowhere_dense);
  REQUIRE(bare_report.interior_cylinder.has_value());
  CHECK(*bare_report.interior_cylinder == pf({{0, 1}}));

  // Two wide stems exhaust the two constraints.
  QCondition thin = make_qcondition(z2, window, PartialFunction{},
                                    {pf({{0, 0}, {1, 0}}), pf({{2, 0}, {3, 0}})}, 0, {{0, 1}},
                                    seq);
  auto thin_report = nowhere_dense_check(thin, 2);
  CHECK_FALSE(thin_report.nowhere_dense);
  REQUIRE(thin_report.interior_cylinder.has_value());
  // The reported cylinder genuinely sits inside POS.
  const PartialFunction& stem = *thin_report.interior_cylinder;
  PointEnumerator points(z2, window, Budget{});
  std::vector<Symbol> x;
  while (points.next(x)) {
    bool extends_stem = true;
    for (const auto& [c, s] : stem.entries())
      if (x[*window.index_of(c)] != s) extends_stem = false;
    if (extends_stem) CHECK(qpos_member(thin, x));
  }
}

TEST_CASE("projection transport for sequence-indexed conditions") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 14);
  auto seq = seq_of({{2, 2}, {3, 3}});

  QCondition p = make_qcondition(z2, window, pf({{0, 1}}),
                                 {pf({{1, 0}, {2, 0}}), pf({{8, 1}, {9, 1}})}, 0, {{0, 1}},
                                 seq);
  // Embedding of [0, 6): the first sigma lies inside, the second misses it.
  CoordMap pi = CoordMap::identity(Window::interval(0, 6));
  REQUIRE(aligned_with(p, pi));
  QCondition proj = project_q(p, pi);
  CHECK(proj.window == Window::interval(0, 6));
  CHECK(proj.sigmas.size() == 1);
  CHECK(validate_qcondition(proj, Strictness::relaxed).ok);

  // Strengthen the projection: decide its sigma away.
  QCondition r = make_qcondition(z2, Window::interval(0, 6), pf({{0, 1}, {1, 1}}), {}, 0, {},
                                 seq);
  REQUIRE(leq_syntactic(proj, r));
  QCondition back = project_pi_q(p, pi, r, Strictness::relaxed);
  CHECK(leq_syntactic(p, back));
  // Pullback containment: every point of POS(back) restricts into POS(r).
  auto points = oracles::qpos_points(back);
  for (const auto& x : points) {
    std::vector<Symbol> y;
    for (Coord c : r.window.coords()) y.push_back(x[*window.index_of(c)]);
    CHECK(qpos_member(r, y));
  }
  CHECK_FALSE(points.empty());

  // Misalignment is rejected.
  CoordMap bad = CoordMap::identity(Window::interval(0, 2));
  CHECK_FALSE(aligned_with(p, bad));
  CHECK_THROWS_AS(project_q(p, bad), Error);
}

TEST_CASE("projection transport with a shifted embedding and high levels") {
  Alphabet z2 = Alphabet::cyclic(2);
  Window window = Window::interval(0, 20);
  auto seq = seq_of({{2, 2}, {3, 3}, {4, 4}});

  // p: one low sigma outside the range, one high sigma outside the range.
  QCondition p = make_qcondition(z2, window, pf({{12, 1}}),
                                 {pf({{13, 0}, {14, 0}}), pf({{15, 1}, {16, 1}, {17, 1}, {18, 1}})},
                                 0, {{0}, {}, {1}}, seq);
  REQUIRE(validate_qcondition(p, Strictness::relaxed).ok);
  // pi embeds fresh source coordinates 30.. onto [0, 10).
  std::vector<std::pair<Coord, Coord>> entries;
  for (Coord c = 0; c < 10; ++c) entries.emplace_back(30 + c, c);
  CoordMap pi{std::move(entries)};
  REQUIRE(aligned_with(p, pi));

  // r on the source side: a stem and one high sigma.
  QCondition r = make_qcondition(z2, pi.domain(), pf({{30, 0}}),
                                 {pf({{33, 1}, {34, 1}, {35, 1}, {36, 1}})}, 0, {{}, {}, {0}},
                                 seq);
  REQUIRE(validate_qcondition(r, Strictness::relaxed).ok);
  REQUIRE(leq_syntactic(project_q(p, pi), r));

  QCondition back = project_pi_q(p, pi, r, Strictness::relaxed);
  CHECK(leq_syntactic(p, back));
  CHECK(back.m_star == p.m_star + r.m_star + 1);
  CHECK(validate_qcondition(back, Strictness::relaxed).ok);
  // The low sigma outside the range was decided into the stem.
  CHECK(back.w.defined(13));
  // The high sigmas survive: p's outside one and r's pushed forward.
  CHECK(back.sigmas.size() == 2);
}
