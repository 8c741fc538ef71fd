#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace packnorm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, std::uint64_t exp);
Rational rational_pow(const Rational& base, std::uint64_t exp);

/// Certified open interval around e^{-n}, from the alternating series
/// sum (-n)^k / k!. Once terms decrease, consecutive partial sums bracket
/// the limit; `terms` extra terms past the convergence point tighten it.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

RationalInterval exp_neg_interval(std::uint64_t n, std::uint64_t terms = 8);

// Certifies x <= e^{-n}: true when x is at or below the interval's lower bound.
bool certified_at_most_exp_neg(const Rational& x, std::uint64_t n, std::uint64_t terms = 8);

std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);
// Decimal rendering with the stated number of fraction digits (truncated).
std::string rational_to_decimal(const Rational& x, unsigned digits);

}  // namespace packnorm
