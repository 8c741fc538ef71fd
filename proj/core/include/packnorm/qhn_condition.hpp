#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packnorm/partial_function.hpp"
#include "packnorm/qhn_seq.hpp"

namespace packnorm::qhn {

/// A condition of the sequence-indexed forcing: a stem w and a family of
/// forbidden cylinders sigma_j with pairwise disjoint domains, partitioned
/// into blocks V_m for m >= m_star with
///   |V_m| <= n1_m * 2^{m_star}   and   |dom(sigma_j)| >= n0_m / 2^{m_star}.
/// blocks[k] holds the sigma indices of level m_star + k; empty blocks are
/// fine. The window merely covers all mentioned coordinates.
struct QCondition {
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  Window window;
  PartialFunction w;
  std::vector<PartialFunction> sigmas;        // canonical order
  std::uint32_t m_star = 0;
  std::vector<std::vector<std::size_t>> blocks;
  NormSeqPrefix seq;

  bool operator==(const QCondition& other) const {
    return alpha == other.alpha && window == other.window && w == other.w &&
           sigmas == other.sigmas && m_star == other.m_star && blocks == other.blocks &&
           seq == other.seq;
  }

  // Level (absolute m) of a sigma index; fails on unassigned indices.
  std::uint32_t level_of(std::size_t sigma_index) const;
};

/// Canonicalizes: sorts sigmas, remaps block indices, trims trailing empty
/// blocks. `blocks` indices refer to the order of `sigmas` as passed in.
QCondition make_qcondition(Alphabet alpha, Window window, PartialFunction w,
                           std::vector<PartialFunction> sigmas, std::uint32_t m_star,
                           std::vector<std::vector<std::size_t>> blocks, NormSeqPrefix seq);

struct QReport {
  bool ok = true;
  std::vector<std::string> issues;

  void flag(const std::string& issue) {
    ok = false;
    issues.push_back(issue);
  }
};

QReport validate_qcondition(const QCondition& p, Strictness mode);
void require_valid(const QCondition& p, Strictness mode);

bool qpos_member(const QCondition& p, const std::vector<Symbol>& x);
std::uint64_t qpos_count(const QCondition& p, const Budget& budget = Budget{});
// Exact count over the window from the product formula (sigma domains are
// pairwise disjoint in a condition).
BigInt qpos_count_closed(const QCondition& p);
std::optional<std::vector<Symbol>> qpos_example(const QCondition& p,
                                                const Budget& budget = Budget{});
bool qpos_subset(const QCondition& q, const QCondition& p, const Budget& budget = Budget{});

/// The syntactic order test: w^p within w^q, and every sigma of p either
/// contains some sigma of q or is contradicted by w^q at some coordinate.
/// Equivalent to POS(q) within POS(p).
bool leq_syntactic(const QCondition& p, const QCondition& q);

}  // namespace packnorm::qhn
