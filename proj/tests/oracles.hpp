#pragma once

// Test-side helpers built from first principles: enumeration-backed set
// comparisons that stay independent of the library's fast paths.

#include <algorithm>
#include <vector>

#include "packnorm/condition.hpp"
#include "packnorm/qhn_condition.hpp"

namespace oracles {

using namespace packnorm;

inline std::vector<std::vector<Symbol>> pos_points(const TruncatedCondition& p,
                                                   const Budget& budget = Budget{}) {
  std::vector<std::vector<Symbol>> out;
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (pos_member(p, x)) out.push_back(x);
  return out;
}

inline std::vector<std::vector<Symbol>> qpos_points(const qhn::QCondition& p,
                                                    const Budget& budget = Budget{}) {
  std::vector<std::vector<Symbol>> out;
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (qhn::qpos_member(p, x)) out.push_back(x);
  return out;
}

inline bool subset_points(const std::vector<std::vector<Symbol>>& inner,
                          const std::vector<std::vector<Symbol>>& outer) {
  for (const auto& x : inner)
    if (std::find(outer.begin(), outer.end(), x) == outer.end()) return false;
  return true;
}

// Convenience builders for literal fixtures.
inline PartialFunction pf(std::vector<std::pair<Coord, Symbol>> entries) {
  return PartialFunction(std::move(entries));
}

inline Window win(std::vector<Coord> coords) { return Window(std::move(coords)); }

}  // namespace oracles
