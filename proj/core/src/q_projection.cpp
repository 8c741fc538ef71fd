#include "packnorm/q_projection.hpp"

#include "packnorm/error.hpp"

namespace packnorm {

bool aligned_with(const TruncatedCondition& p, const CoordMap& pi) {
  Window range = pi.range();
  for (const auto& t : p.creatures)
    if (!t.z().subset_of(range) && !Window::disjoint(t.z(), range)) return false;
  return true;
}

TruncatedCondition project_condition(const TruncatedCondition& p, const CoordMap& pi) {
  if (!pi.range().subset_of(p.window))
    fail(Errc::bad_input, "embedding range must lie inside the window");
  if (!aligned_with(p, pi))
    fail(Errc::not_aligned, "a creature straddles the embedding's range");

  CoordMap inv = pi.inverse();
  // Stem w o pi: value w(pi(i)) wherever defined.
  std::vector<std::pair<Coord, Symbol>> stem;
  for (const auto& [src, dst] : pi.entries()) {
    auto v = p.w.at(dst);
    if (v) stem.emplace_back(src, *v);
  }
  std::vector<Creature> creatures;
  for (const auto& t : p.creatures)
    if (t.z().subset_of(pi.range())) creatures.push_back(permute_creature(t, inv));
  return make_condition(p.alpha, pi.domain(), PartialFunction(std::move(stem)),
                        std::move(creatures), p.flavor);
}

TruncatedCondition project_complete(const TruncatedCondition& p, const CoordMap& pi,
                                    const TruncatedCondition& r, const Budget& budget) {
  if (!(r.window == pi.domain()))
    fail(Errc::bad_input, "completion source must live on the embedding's domain");
  if (!(r.alpha == p.alpha) || r.flavor != p.flavor)
    fail(Errc::bad_input, "completion source must match alphabet and flavor");
  if (!pi.range().subset_of(p.window))
    fail(Errc::bad_input, "embedding range must lie inside the window");
  if (!aligned_with(p, pi))
    fail(Errc::not_aligned, "a creature straddles the embedding's range");

  Window range = pi.range();
  PartialFunction stem = pf_union(permute_pf(r.w, pi), p.w.minus_domain(range));
  std::vector<Creature> creatures;
  for (const auto& t : p.creatures)
    if (Window::disjoint(t.z(), range)) creatures.push_back(t);
  for (const auto& t : r.creatures) creatures.push_back(permute_creature(t, pi, budget));
  TruncatedCondition q = make_condition(p.alpha, p.window, std::move(stem),
                                        std::move(creatures), p.flavor);
  require_valid(q);
  return q;
}

}  // namespace packnorm
