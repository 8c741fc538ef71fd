#pragma once

#include "packnorm/condition.hpp"

namespace packnorm {

/// Alignment with a coordinate embedding: every creature lies inside the
/// embedding's range or misses it entirely.
bool aligned_with(const TruncatedCondition& p, const CoordMap& pi);

/// Pulls a condition back along pi: the stem becomes w o pi and the creatures
/// inside rng(pi) are relabeled by pi^{-1}; the rest are dropped. Requires
/// rng(pi) within p's window and alignment; the result lives on dom(pi).
TruncatedCondition project_condition(const TruncatedCondition& p, const CoordMap& pi);

/// The completion step: given r on dom(pi) extending project_condition(p, pi),
/// builds q on p's window with project_condition(q, pi) == r, keeping p's
/// material outside rng(pi) and transplanting r's inside.
TruncatedCondition project_complete(const TruncatedCondition& p, const CoordMap& pi,
                                    const TruncatedCondition& r,
                                    const Budget& budget = Budget{});

}  // namespace packnorm
