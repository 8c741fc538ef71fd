#pragma once

#include <optional>
#include <vector>

#include "packnorm/measure.hpp"
#include "packnorm/qhn_condition.hpp"

namespace packnorm::qhn {

/// Deterministic strengthening into the dense normal form: each sigma of
/// level m shrinks to its lowest floor(n0_m / 2^{m_star}) + 1 coordinates.
/// A sigma already at the minimum integer size (so that the target exceeds
/// it) is decided away instead: the stem gets one conflicting value and the
/// sigma is dropped. The result is above the input in the syntactic order.
QCondition normalize_dense(const QCondition& p, Strictness mode = Strictness::relaxed);

struct NullRefinement {
  QCondition q;
  std::vector<Rational> block_measures;         // per fresh level, exact
  std::vector<std::uint64_t> bound_exponents;   // N with block measure <= e^{-N}
  Rational total_measure;                       // product over the fresh levels
  bool bound_certified = false;                 // every block cleared its bound
};

/// Builds a condition compatible with p whose POS carries explicit smallness
/// witnesses: starting at the first level past m_star(p)+5 where the sequence
/// satisfies n1_k > |X|^{2 n0_k}, it fills every remaining level with n1_k
/// fresh disjoint all-zero sigmas on n0_k coordinates each, avoiding p's stem
/// and low-level material. Exact per-level avoidance measures are returned
/// with certified e^{-|X|^{n0_k}} comparisons.
NullRefinement null_refinement(const QCondition& p, Strictness mode = Strictness::relaxed);

struct NowhereDenseReport {
  bool nowhere_dense = true;
  // A stem domain every sigma meets, plus a cylinder inside POS over it.
  std::optional<Window> fat_stem_domain;
  std::optional<PartialFunction> interior_cylinder;
  // Witness for the positive answer at the largest stem size checked.
  std::optional<std::size_t> fresh_sigma;
};

/// Truncation-relative nowhere-density: for every stem domain extending
/// dom(w) by at most max_extra coordinates there must be a sigma disjoint
/// from it (the escape route into a forbidden cylinder). When some stem
/// domain meets every sigma, a cylinder inside POS witnesses the failure.
NowhereDenseReport nowhere_dense_check(const QCondition& p, std::size_t max_extra);

bool aligned_with(const QCondition& p, const CoordMap& pi);

/// Pullback along an embedding: the stem becomes w o pi, sigmas inside
/// rng(pi) are relabeled by pi^{-1} and keep their levels, the rest drop.
QCondition project_q(const QCondition& p, const CoordMap& pi);

/// Transport of a strengthening across the embedding: given r above
/// project_q(p, pi), builds p* above p whose pullback refines r — the stem
/// absorbs r's stem and one conflict per low-level sigma on both sides, the
/// high-level sigmas of p outside rng(pi) and of r (pushed forward) merge.
QCondition project_pi_q(const QCondition& p, const CoordMap& pi, const QCondition& r,
                        Strictness mode = Strictness::relaxed);

}  // namespace packnorm::qhn
