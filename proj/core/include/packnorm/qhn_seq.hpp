#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packnorm/alphabet.hpp"
#include "packnorm/rational.hpp"

namespace packnorm::qhn {

enum class Strictness { strict, relaxed };

/// A finite prefix of a growth sequence (n0_m, n1_m). Strict prefixes obey
///   4 < n0_m <= n1_m < n0_{m+1}
///   2^{2(m*+2)} * sum_{m<m*} n0_m*n1_m < n0_{m*}   for every m* in range.
/// Relaxed mode keeps only the order skeleton (1 <= n0_m <= n1_m < n0_{m+1});
/// the growth clauses are reported but waived.
class NormSeqPrefix {
public:
  NormSeqPrefix() = default;
  explicit NormSeqPrefix(std::vector<std::pair<BigInt, BigInt>> levels)
      : levels_(std::move(levels)) {}

  std::size_t size() const { return levels_.size(); }
  const BigInt& n0(std::size_t m) const { return levels_.at(m).first; }
  const BigInt& n1(std::size_t m) const { return levels_.at(m).second; }
  const std::vector<std::pair<BigInt, BigInt>>& levels() const { return levels_; }

  bool operator==(const NormSeqPrefix& other) const { return levels_ == other.levels_; }

private:
  std::vector<std::pair<BigInt, BigInt>> levels_;
};

struct SeqReport {
  bool ok = true;
  std::vector<std::string> violations;  // all strict-clause failures, always listed

  void flag(const std::string& v) {
    ok = false;
    violations.push_back(v);
  }
};

// Checks every strict clause and reports each failure.
SeqReport validate_seq(const NormSeqPrefix& seq);
// Order skeleton only (what relaxed mode still demands).
SeqReport validate_seq_relaxed(const NormSeqPrefix& seq);
bool seq_ok(const NormSeqPrefix& seq, Strictness mode);

/// Smallest index from which every remaining level satisfies
/// n1_k > |X|^{2*n0_k} (the growth witness used by the null refinement);
/// nullopt when no tail of the prefix qualifies.
std::optional<std::size_t> growth_witness_index(const NormSeqPrefix& seq,
                                                const Alphabet& alpha);

/// The canonical strict prefix: n0_0 = n1_0 = 5, then the smallest value
/// clearing the growth clause at each index.
NormSeqPrefix strict_seq(std::size_t length);

/// A small relaxed prefix for desk-scale runs: n0_m = 2^{m+1}, n1_m = 3*2^m.
NormSeqPrefix relaxed_seq(std::size_t length);

}  // namespace packnorm::qhn
