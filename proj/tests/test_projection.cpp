#include <doctest.h>

#include "oracles.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/q_projection.hpp"

using namespace packnorm;
using oracles::pf;
using oracles::win;

namespace {

TruncatedCondition layered_condition() {
  Alphabet alpha = Alphabet::cyclic(2);
  Window window = Window::interval(0, 9);
  Window z0 = Window::interval(1, 4);
  Window z1 = Window::interval(4, 9);
  return make_condition(alpha, window, pf({{0, 1}}),
                        {Creature::make(z0, {PartialFunction::constant(z0, 0)}),
                         Creature::make(z1, {PartialFunction::constant(z1, 0)})},
                        Flavor::q_plus_infinity);
}

}  // namespace

TEST_CASE("identity embedding keeps the aligned prefix") {
  TruncatedCondition p = layered_condition();
  CoordMap pi = CoordMap::identity(Window::interval(0, 4));
  REQUIRE(aligned_with(p, pi));
  TruncatedCondition proj = project_condition(p, pi);
  CHECK(proj.window == Window::interval(0, 4));
  CHECK(proj.w == p.w);
  CHECK(proj.creatures.size() == 1);
  CHECK(validate(proj).ok);
  CHECK(pos_count(proj) == value_count(p.alpha, p.creatures[0]));
}

TEST_CASE("relabeling embeddings pull the condition back") {
  TruncatedCondition p = layered_condition();
  // dom(pi) = [0,9) shifted: pi(i) = i, but viewed from a relabeled source.
  std::vector<std::pair<Coord, Coord>> entries;
  for (Coord c = 0; c < 9; ++c) entries.emplace_back(c + 20, c);
  CoordMap pi{std::move(entries)};
  TruncatedCondition proj = project_condition(p, pi);
  CHECK(proj.window == Window::interval(20, 29));
  CHECK(validate(proj).ok);
  CHECK(pos_count(proj) == pos_count(p));
}

TEST_CASE("straddling creatures are rejected") {
  TruncatedCondition p = layered_condition();
  CoordMap pi = CoordMap::identity(Window::interval(0, 5));  // cuts the second creature
  CHECK_FALSE(aligned_with(p, pi));
  CHECK_THROWS_AS(project_condition(p, pi), Error);
}

TEST_CASE("completion transports a strengthening back exactly") {
  TruncatedCondition p = layered_condition();
  CoordMap pi = CoordMap::identity(Window::interval(0, 4));
  TruncatedCondition proj = project_condition(p, pi);

  gen::Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    MoveCertificate cert;
    TruncatedCondition r = gen::random_strengthening(rng, proj, 2, cert);
    TruncatedCondition q = project_complete(p, pi, r);
    CHECK(project_condition(q, pi) == r);
    CHECK(validate(q).ok);
    CHECK(leq_semantic(p, q));
  }
}

TEST_CASE("projections of certified strengthenings stay ordered") {
  gen::Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    gen::ConditionGenConfig cg;
    cg.alpha = Alphabet::cyclic(2);
    cg.window_size = 10;
    cg.stem_coords = 1;
    cg.run_min = 3;
    cg.run_max = 4;
    cg.min_n = 2;
    TruncatedCondition p = gen::random_condition(rng, cg);
    Coord cut_at = p.creatures.front().z().max() + 1;
    CoordMap pi = CoordMap::identity(Window::interval(0, cut_at));
    if (!aligned_with(p, pi)) continue;

    MoveCertificate cert;
    TruncatedCondition q = gen::random_strengthening(rng, p, 2, cert);
    if (!aligned_with(q, pi)) continue;
    CHECK(leq_semantic(project_condition(p, pi), project_condition(q, pi)));
  }
}
