#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packnorm/alphabet.hpp"
#include "packnorm/partial_function.hpp"
#include "packnorm/rational.hpp"

namespace packnorm {

/// The packing number of a constraint family: the largest k such that every
/// subfamily D' of delta contains a subfamily D'' with pairwise disjoint
/// domains covering at least k*|D'| coordinates. Exhaustive over the subset
/// lattice; delta size is capped by budget.max_delta.
std::uint64_t norm_n(const Window& z, const std::vector<PartialFunction>& delta,
                     const Budget& budget = Budget{});

/// A constraint creature: a nonempty coordinate set z together with a family
/// delta of nonempty partial functions on z, plus the cached packing number.
///
/// delta empty encodes the unconstrained creature (norm infinity, value set
/// all of X^z). Conditions only admit valid() creatures: packing number >= 1
/// or delta empty; restriction and linking can produce n = 0 pairs, which
/// callers must reject via valid().
class Creature {
public:
  static Creature make(Window z, std::vector<PartialFunction> delta,
                       const Budget& budget = Budget{});
  static Creature unconstrained(Window z);

  const Window& z() const { return z_; }
  const std::vector<PartialFunction>& delta() const { return delta_; }
  bool infinite_norm() const { return delta_.empty(); }
  std::uint64_t n() const { return n_; }  // meaningless when infinite_norm()

  bool valid() const { return infinite_norm() || n_ >= 1; }

  // nor = log_8(n). Exact comparisons go through the integer forms below;
  // the real value is for display only.
  double nor_real() const;
  // nor > threshold, where threshold is a rational p/q: n^q > 8^p exactly.
  bool nor_exceeds(const Rational& threshold) const;
  bool nor_at_least(const Rational& threshold) const;

  bool operator==(const Creature& other) const {
    return z_ == other.z_ && delta_ == other.delta_;
  }
  bool operator<(const Creature& other) const {
    if (!(z_ == other.z_)) return z_ < other.z_;
    return delta_ < other.delta_;
  }

private:
  Creature() = default;
  Window z_;
  std::vector<PartialFunction> delta_;  // canonical: sorted, deduplicated
  std::uint64_t n_ = 0;
};

/// Membership in the creature's value set: x (total on z, aligned with
/// z.coords()) extends no member of delta.
bool value_member(const Creature& t, const std::vector<Symbol>& x);
bool value_member_pf(const Creature& t, const PartialFunction& x);

/// All members of the value set, in enumeration order; budget-guarded.
std::vector<std::vector<Symbol>> value_set(const Alphabet& alpha, const Creature& t,
                                           const Budget& budget = Budget{});
std::uint64_t value_count(const Alphabet& alpha, const Creature& t,
                          const Budget& budget = Budget{});

/// System of distinct representatives for the domains of delta: an injective
/// choice of one coordinate per member, by augmenting-path matching.
/// Result is aligned with delta's canonical order.
std::vector<Coord> sdr(const std::vector<PartialFunction>& delta);

/// A verified member of the value set, built from an SDR: the witness differs
/// from each constraint at its representative and is zero elsewhere.
PartialFunction witness_value(const Alphabet& alpha, const Creature& t);

}  // namespace packnorm
