#include "packnorm/measure.hpp"

#include "packnorm/error.hpp"

namespace packnorm {

Rational cylinder_measure(const Alphabet& alpha, const PartialFunction& pf) {
  return Rational(1, big_pow(BigInt(alpha.size()), pf.size()));
}

Rational avoid_measure(const Alphabet& alpha, const std::vector<PartialFunction>& sigmas,
                       const Budget& budget) {
  for (const auto& sigma : sigmas)
    if (sigma.empty()) return Rational(0);  // the empty cylinder forbids everything

  bool disjoint = true;
  for (std::size_t i = 0; i < sigmas.size() && disjoint; ++i)
    for (std::size_t j = i + 1; j < sigmas.size(); ++j)
      if (!Window::disjoint(sigmas[i].domain(), sigmas[j].domain())) {
        disjoint = false;
        break;
      }
  if (disjoint) {
    Rational out = 1;
    for (const auto& sigma : sigmas) out *= Rational(1) - cylinder_measure(alpha, sigma);
    return out;
  }

  if (sigmas.size() > 63 || (std::uint64_t{1} << sigmas.size()) > budget.max_subsets)
    fail(Errc::enumeration_too_large,
         "inclusion-exclusion over " + std::to_string(sigmas.size()) + " cylinders");
  Rational out = 0;
  std::uint64_t full = (std::uint64_t{1} << sigmas.size()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    PartialFunction merged;
    bool compatible = true;
    for (std::size_t i = 0; i < sigmas.size() && compatible; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!merged.compatible_with(sigmas[i]))
        compatible = false;
      else
        merged = pf_union(merged, sigmas[i]);
    }
    if (!compatible) continue;  // contradictory cylinders intersect in nothing
    Rational term = cylinder_measure(alpha, merged);
    if (__builtin_popcountll(mask) % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

Rational block_avoid_measure(const Alphabet& alpha, std::uint64_t d_size,
                             std::uint64_t n_count) {
  Rational factor = Rational(1) - Rational(1, big_pow(BigInt(alpha.size()), d_size));
  return rational_pow(factor, n_count);
}

}  // namespace packnorm
