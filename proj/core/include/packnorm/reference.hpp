#pragma once

#include <vector>

#include "packnorm/creature.hpp"

namespace packnorm::reference {

// Definition-literal reference implementations. These evaluate the defining
// quantifiers directly, with no shared machinery with the optimized paths,
// and serve as the oracles of the verification suites.

/// Largest k such that every subfamily contains a pairwise-disjoint
/// subfamily covering at least k times its size. Evaluated by iterating all
/// subfamilies and, inside each, all sub-subfamilies.
std::uint64_t norm_by_definition(const std::vector<PartialFunction>& delta);

/// Hall's condition for the domain system: every subfamily's domain union is
/// at least as large as the subfamily.
bool hall_condition(const std::vector<PartialFunction>& delta);

/// Membership by the defining formula: x extends no member of delta.
bool value_member_by_definition(const std::vector<PartialFunction>& delta,
                                const PartialFunction& x);

}  // namespace packnorm::reference
