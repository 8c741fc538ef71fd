#include "packnorm/reference.hpp"

#include "packnorm/error.hpp"

namespace packnorm::reference {

namespace {

bool pairwise_disjoint(const std::vector<PartialFunction>& delta, std::uint32_t mask) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    for (std::size_t j = i + 1; j < delta.size(); ++j) {
      if (!(mask >> j & 1)) continue;
      if (!Window::disjoint(delta[i].domain(), delta[j].domain())) return false;
    }
  }
  return true;
}

std::size_t union_size(const std::vector<PartialFunction>& delta, std::uint32_t mask) {
  Window u;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (mask >> i & 1) u = Window::set_union(u, delta[i].domain());
  return u.size();
}

}  // namespace

std::uint64_t norm_by_definition(const std::vector<PartialFunction>& delta) {
  if (delta.empty() || delta.size() > 20)
    fail(Errc::enumeration_too_large, "reference norm needs 1..20 constraints");
  std::uint32_t full = (std::uint32_t{1} << delta.size()) - 1;
  std::uint64_t k = 0;
  while (true) {
    bool holds_for_all = true;
    for (std::uint32_t sub = 1; sub <= full && holds_for_all; ++sub) {
      std::uint64_t needed = (k + 1) * static_cast<std::uint64_t>(__builtin_popcount(sub));
      bool witnessed = false;
      // Iterate all subsets of `sub`, the empty one included.
      std::uint32_t inner = sub;
      while (true) {
        if (pairwise_disjoint(delta, inner) && union_size(delta, inner) >= needed) {
          witnessed = true;
          break;
        }
        if (inner == 0) break;
        inner = (inner - 1) & sub;
      }
      if (!witnessed) holds_for_all = false;
    }
    if (!holds_for_all) return k;
    ++k;
  }
}

bool hall_condition(const std::vector<PartialFunction>& delta) {
  if (delta.size() > 20) fail(Errc::enumeration_too_large, "reference Hall check needs <= 20");
  std::uint32_t full = delta.empty() ? 0 : (std::uint32_t{1} << delta.size()) - 1;
  for (std::uint32_t sub = 1; sub <= full; ++sub)
    if (union_size(delta, sub) < static_cast<std::size_t>(__builtin_popcount(sub)))
      return false;
  return true;
}

bool value_member_by_definition(const std::vector<PartialFunction>& delta,
                                const PartialFunction& x) {
  for (const auto& eta : delta)
    if (eta.subfunction_of(x)) return false;
  return true;
}

}  // namespace packnorm::reference
