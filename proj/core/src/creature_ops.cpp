#include "packnorm/creature_ops.hpp"

#include <algorithm>

#include "packnorm/error.hpp"

namespace packnorm {

namespace {

// Members of delta lying at least half inside z, restricted to z.
std::vector<PartialFunction> half_restrict_family(const std::vector<PartialFunction>& delta,
                                                  const Window& z) {
  std::vector<PartialFunction> out;
  for (const auto& eta : delta) {
    Window dom = eta.domain();
    std::size_t inside = dom.intersect(z).size();
    if (2 * inside >= dom.size() && inside > 0) out.push_back(eta.restrict_to(z));
  }
  return out;
}

}  // namespace

Creature restrict_half(const Creature& t, const Window& z_star, const Budget& budget) {
  if (z_star.empty() || !z_star.subset_of(t.z()))
    fail(Errc::bad_input, "restriction set must be a nonempty subset of z");
  auto family = half_restrict_family(t.delta(), z_star);
  if (family.empty())
    fail(Errc::empty_restriction, "no constraint lies half inside the restriction set");
  return Creature::make(z_star, std::move(family), budget);
}

Creature glue(const std::vector<Creature>& ts, const Budget& budget) {
  if (ts.empty()) fail(Errc::bad_input, "glue needs at least one creature");
  Window z;
  std::vector<PartialFunction> delta;
  for (const auto& t : ts) {
    if (!Window::disjoint(z, t.z()))
      fail(Errc::domain_overlap, "creatures to glue must have disjoint coordinate sets");
    z = Window::set_union(z, t.z());
    delta.insert(delta.end(), t.delta().begin(), t.delta().end());
  }
  return Creature::make(std::move(z), std::move(delta), budget);
}

Creature link(const Creature& t0, const Creature& t1, const Budget& budget) {
  if (!(t0.z() == t1.z()))
    fail(Errc::domain_mismatch, "linked creatures must share the coordinate set");
  std::vector<PartialFunction> delta = t0.delta();
  delta.insert(delta.end(), t1.delta().begin(), t1.delta().end());
  return Creature::make(t0.z(), std::move(delta), budget);
}

std::pair<Creature, Creature> cut(const Creature& t, const Window& z, const Budget& budget) {
  if (z.empty() || !z.subset_of(t.z()) || z == t.z())
    fail(Errc::bad_input, "cut needs a nonempty proper subset of z");
  Window rest = t.z().minus(z);
  auto family0 = half_restrict_family(t.delta(), z);
  auto family1 = half_restrict_family(t.delta(), rest);
  Creature s0 = Creature::make(z, std::move(family0), budget);
  Creature s1 = Creature::make(rest, std::move(family1), budget);
  return {std::move(s0), std::move(s1)};
}

bool sigma_member(const Creature& t, const std::vector<Creature>& members) {
  if (members.empty()) return false;  // compositions of the empty family are empty
  Window z;
  for (const auto& s : members) {
    if (!s.valid()) return false;
    if (!Window::disjoint(z, s.z())) return false;
    z = Window::set_union(z, s.z());
  }
  if (!(z == t.z())) return false;
  if (!t.valid()) return false;
  for (const auto& s : members)
    for (const auto& eta : s.delta())
      if (std::find(t.delta().begin(), t.delta().end(), eta) == t.delta().end()) return false;
  return true;
}

bool sigma_bot_member(const std::vector<Creature>& pieces, const Creature& t) {
  if (pieces.empty()) return false;
  Window z;
  for (const auto& s : pieces) {
    if (!s.valid()) return false;
    if (!Window::disjoint(z, s.z())) return false;
    z = Window::set_union(z, s.z());
  }
  if (!(z == t.z())) return false;
  for (const auto& eta : t.delta()) {
    bool covered = false;
    for (const auto& s : pieces) {
      PartialFunction r = eta.restrict_to(s.z());
      if (r.empty()) continue;
      if (std::find(s.delta().begin(), s.delta().end(), r) != s.delta().end()) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

Creature translate_creature(const Alphabet& alpha, const Creature& t,
                            const PartialFunction& v, const Budget& budget) {
  if (!t.z().subset_of(v.domain()))
    fail(Errc::missing_coordinate, "translation assignment must cover z");
  std::vector<PartialFunction> delta;
  delta.reserve(t.delta().size());
  for (const auto& eta : t.delta()) delta.push_back(translate_pf(alpha, eta, v));
  return Creature::make(t.z(), std::move(delta), budget);
}

Creature permute_creature(const Creature& t, const CoordMap& pi, const Budget& budget) {
  if (!t.z().subset_of(pi.domain()))
    fail(Errc::missing_coordinate, "coordinate map must cover z");
  std::vector<PartialFunction> delta;
  delta.reserve(t.delta().size());
  for (const auto& eta : t.delta()) delta.push_back(permute_pf(eta, pi));
  return Creature::make(pi.image(t.z()), std::move(delta), budget);
}

}  // namespace packnorm
