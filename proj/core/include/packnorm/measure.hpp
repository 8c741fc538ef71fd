#pragma once

#include <vector>

#include "packnorm/partial_function.hpp"
#include "packnorm/rational.hpp"

namespace packnorm {

// Product measure of the cylinder a partial function carves out: |X|^{-|dom|}.
Rational cylinder_measure(const Alphabet& alpha, const PartialFunction& pf);

/// Product measure of the set of points extending none of the given partial
/// functions. Disjoint domains use the exact product formula; otherwise
/// inclusion-exclusion over compatible subfamilies (budget.max_subsets cap).
Rational avoid_measure(const Alphabet& alpha, const std::vector<PartialFunction>& sigmas,
                       const Budget& budget = Budget{});

/// Exact avoidance measure of one disjoint-domain block of n_count functions,
/// each on d_size coordinates: (1 - |X|^{-d_size})^{n_count}.
Rational block_avoid_measure(const Alphabet& alpha, std::uint64_t d_size,
                             std::uint64_t n_count);

}  // namespace packnorm
