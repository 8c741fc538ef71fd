#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packnorm/qhn_condition.hpp"

namespace packnorm::qhn {

/// First common point of the two POS sets in enumeration order, or nullopt.
/// The ground-truth compatibility oracle.
std::optional<std::vector<Symbol>> compatible_bruteforce(const QCondition& p0,
                                                         const QCondition& p1,
                                                         const Budget& budget = Budget{});

struct HallRequest {
  Window domain;
  std::size_t count = 1;  // required representative set size
};

/// Pairwise disjoint coordinate sets u_i within each request's domain with
/// |u_i| = count_i, found by expanding each request into `count` matching
/// copies and running a distinct-representatives matching. no-selection error
/// when the expanded system violates Hall's condition.
std::vector<Window> hall_select_u(const std::vector<HallRequest>& requests);

/// Builds a common upper bound from a shared POS point: pins the stems plus
/// one violated coordinate per low-level sigma, shrinks the high-level sigmas
/// off the pinned set, and selects disjoint sub-sigmas of certified size.
/// truncation-too-short when the needed level or the cardinality clause
/// escapes the prefix.
QCondition compatible_constructive(const QCondition& p0, const QCondition& p1,
                                   const std::vector<Symbol>& witness,
                                   Strictness mode = Strictness::relaxed,
                                   const Budget& budget = Budget{});
// Convenience: brute-force witness search, then the constructive path.
std::optional<QCondition> compatible_constructive(const QCondition& p0, const QCondition& p1,
                                                  Strictness mode = Strictness::relaxed,
                                                  const Budget& budget = Budget{});

/// Canonical serialization of (m_star, w, the first n+2 block levels with
/// their sigmas). Conditions sharing a key amalgamate in groups of n+1; the
/// key is finite data, so there are only countably many keys.
std::string class_key(const QCondition& p, std::size_t n);

/// Common upper bound of n+1 conditions sharing a class key: Hall-selects
/// disjoint sub-sigmas inside every high-level sigma, and decides the shared
/// low levels against their sigmas. insufficient-capacity when the selection
/// is infeasible at the given parameters.
QCondition amalgamate_class(const std::vector<QCondition>& ps,
                            Strictness mode = Strictness::relaxed,
                            const Budget& budget = Budget{});

}  // namespace packnorm::qhn
