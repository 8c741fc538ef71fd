#include "packnorm/qhn_seq.hpp"

#include "packnorm/error.hpp"

namespace packnorm::qhn {

SeqReport validate_seq_relaxed(const NormSeqPrefix& seq) {
  SeqReport report;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    if (seq.n0(m) < 1) report.flag("n0_" + std::to_string(m) + " must be positive");
    if (seq.n0(m) > seq.n1(m))
      report.flag("n0_" + std::to_string(m) + " exceeds n1_" + std::to_string(m));
    if (m + 1 < seq.size() && !(seq.n1(m) < seq.n0(m + 1)))
      report.flag("n1_" + std::to_string(m) + " must be below n0_" + std::to_string(m + 1));
  }
  return report;
}

SeqReport validate_seq(const NormSeqPrefix& seq) {
  SeqReport report = validate_seq_relaxed(seq);
  for (std::size_t m = 0; m < seq.size(); ++m)
    if (!(seq.n0(m) > 4)) report.flag("n0_" + std::to_string(m) + " must exceed 4");
  BigInt running_sum = 0;  // sum_{m < m*} n0_m * n1_m
  for (std::size_t m_star = 0; m_star < seq.size(); ++m_star) {
    BigInt lhs = big_pow(2, 2 * (static_cast<std::uint64_t>(m_star) + 2)) * running_sum;
    if (!(lhs < seq.n0(m_star)))
      report.flag("growth clause fails at index " + std::to_string(m_star));
    running_sum += seq.n0(m_star) * seq.n1(m_star);
  }
  return report;
}

bool seq_ok(const NormSeqPrefix& seq, Strictness mode) {
  return mode == Strictness::strict ? validate_seq(seq).ok : validate_seq_relaxed(seq).ok;
}

NormSeqPrefix strict_seq(std::size_t length) {
  std::vector<std::pair<BigInt, BigInt>> levels;
  BigInt running_sum = 0;
  for (std::size_t m = 0; m < length; ++m) {
    BigInt n0 = m == 0 ? BigInt(5)
                       : big_pow(2, 2 * (static_cast<std::uint64_t>(m) + 2)) * running_sum + 1;
    levels.emplace_back(n0, n0);
    running_sum += n0 * n0;
  }
  return NormSeqPrefix(std::move(levels));
}

NormSeqPrefix relaxed_seq(std::size_t length) {
  std::vector<std::pair<BigInt, BigInt>> levels;
  for (std::size_t m = 0; m < length; ++m)
    levels.emplace_back(big_pow(2, m + 1), 3 * big_pow(2, m));
  return NormSeqPrefix(std::move(levels));
}

std::optional<std::size_t> growth_witness_index(const NormSeqPrefix& seq,
                                                const Alphabet& alpha) {
  if (seq.size() == 0) return std::nullopt;
  std::optional<std::size_t> witness;
  for (std::size_t k = seq.size(); k-- > 0;) {
    BigInt exponent = 2 * seq.n0(k);
    if (exponent > 4096) return witness;  // beyond any desk-scale comparison
    BigInt bound = big_pow(BigInt(alpha.size()), exponent.convert_to<std::uint64_t>());
    if (seq.n1(k) > bound)
      witness = k;
    else
      break;
  }
  return witness;
}

}  // namespace packnorm::qhn
