#include "packnorm/rational.hpp"

#include "packnorm/error.hpp"

namespace packnorm {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt out = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

Rational rational_pow(const Rational& base, std::uint64_t exp) {
  Rational out = 1;
  Rational b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

RationalInterval exp_neg_interval(std::uint64_t n, std::uint64_t terms) {
  // Partial sums S_k of sum (-n)^k / k!. For k >= n the term magnitudes
  // strictly decrease, so S_k and S_{k+1} bracket e^{-n}. Iterate until the
  // term magnitude drops below 2^{-(2n+24)} (well under e^{-n}), then take
  // `terms` more for margin.
  if (n == 0) return RationalInterval{1, 1};
  // Integer accumulator over the common denominator k!:
  //   acc_k = acc_{k-1} * k + (-n)^k,  S_k = acc_k / k!.
  BigInt acc = 1;        // k = 0
  BigInt power = 1;      // (-n)^k
  BigInt factorial = 1;  // k!
  BigInt prev_acc = acc;
  BigInt prev_factorial = factorial;
  // Stop once |term| = n^k / k! is below 2^{-(2n+24)}, well under e^{-n}.
  BigInt tiny_den = big_pow(2, 2 * n + 24);
  std::uint64_t remaining = terms;
  for (std::uint64_t k = 1;; ++k) {
    power *= -static_cast<std::int64_t>(n);
    prev_acc = acc;
    prev_factorial = factorial;
    factorial *= k;
    acc = acc * k + power;
    if (k > n && boost::multiprecision::abs(power) * tiny_den < factorial) {
      if (remaining == 0) break;
      --remaining;
    }
  }
  Rational sum(acc, factorial);
  Rational prev(prev_acc, prev_factorial);
  RationalInterval out;
  if (sum < prev) {
    out.lo = sum;
    out.hi = prev;
  } else {
    out.lo = prev;
    out.hi = sum;
  }
  if (out.lo < 0) out.lo = 0;  // e^{-n} is positive
  return out;
}

bool certified_at_most_exp_neg(const Rational& x, std::uint64_t n, std::uint64_t terms) {
  return x <= exp_neg_interval(n, terms).lo;
}

std::string rational_to_string(const Rational& x) {
  return x.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    fail(Errc::bad_input, "cannot parse rational '" + s + "'");
  }
}

std::string rational_to_decimal(const Rational& x, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt integral = num / den;
  BigInt rem = num % den;
  std::string out = (neg ? "-" : "") + integral.str();
  if (digits == 0) return out;
  out += ".";
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    BigInt digit = rem / den;
    out += digit.str();
    rem %= den;
  }
  return out;
}

}  // namespace packnorm
