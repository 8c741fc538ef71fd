#pragma once

#include <vector>

#include "packnorm/condition.hpp"

namespace packnorm {

/// Per-block norm thresholds used while choosing block boundaries: creatures
/// reaching past boundary i must have nor strictly above at(i). Linear in the
/// block index; paper_mode(k) reproduces the fixed schedule used to amalgamate
/// k conditions at full scale.
class Slack {
public:
  static Slack linear(Rational base, Rational step) { return Slack(base, step); }
  static Slack paper_mode(std::size_t n_conditions) {
    return Slack(Rational(static_cast<long>(n_conditions) + 4), Rational(1));
  }

  Rational at(std::size_t i) const { return base_ + step_ * static_cast<long>(i); }
  const Rational& base() const { return base_; }
  const Rational& step() const { return step_; }

private:
  Slack(Rational base, Rational step) : base_(std::move(base)), step_(std::move(step)) {}
  Rational base_;
  Rational step_;
};

struct AmalgamResult {
  TruncatedCondition q;
  std::vector<MoveCertificate> certificates;  // one per input, replaying to q
  std::vector<Coord> boundaries;              // chosen block boundaries, ascending
};

/// Builds a common strengthening of conditions sharing a stem, with a
/// replayable certificate from each input:
///   1. pick block boundaries (greedy smallest) so that every condition has a
///      creature inside each block, straddlers span one boundary only, and
///      deeper creatures clear the slack schedule;
///   2. split every straddler at its boundary;
///   3. compose per block within each condition;
///   4. link the per-block composites across conditions.
/// Fails with truncation-too-short when no boundary sequence fits the window,
/// and with insufficient-norm when an intermediate creature degenerates.
AmalgamResult amalgamate(const std::vector<TruncatedCondition>& ps, const Slack& slack,
                         const Budget& budget = Budget{});

}  // namespace packnorm
