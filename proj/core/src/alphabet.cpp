#include "packnorm/alphabet.hpp"

#include <limits>

#include "packnorm/error.hpp"

namespace packnorm {

Alphabet::Alphabet(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) fail(Errc::bad_input, "alphabet needs at least one cyclic order");
  std::uint64_t size = 1;
  for (auto k : orders_) {
    if (k < 1) fail(Errc::bad_input, "cyclic order must be >= 1");
    size *= k;
    if (size > std::numeric_limits<std::uint32_t>::max())
      fail(Errc::bad_input, "alphabet too large");
  }
  if (size < 2) fail(Errc::bad_input, "alphabet must have at least two symbols");
  size_ = static_cast<std::uint32_t>(size);
}

void Alphabet::require_valid(Symbol a) const {
  if (!valid(a)) fail(Errc::invalid_symbol, "symbol " + std::to_string(a) + " out of range");
}

Symbol Alphabet::add(Symbol a, Symbol b) const {
  require_valid(a);
  require_valid(b);
  Symbol out = 0;
  std::uint32_t radix = 1;
  for (auto k : orders_) {
    std::uint32_t ca = a % k;
    std::uint32_t cb = b % k;
    a /= k;
    b /= k;
    out += ((ca + cb) % k) * radix;
    radix *= k;
  }
  return out;
}

Symbol Alphabet::neg(Symbol a) const {
  require_valid(a);
  Symbol out = 0;
  std::uint32_t radix = 1;
  for (auto k : orders_) {
    std::uint32_t ca = a % k;
    a /= k;
    out += ((k - ca) % k) * radix;
    radix *= k;
  }
  return out;
}

std::vector<std::uint32_t> Alphabet::components(Symbol a) const {
  require_valid(a);
  std::vector<std::uint32_t> comps;
  comps.reserve(orders_.size());
  for (auto k : orders_) {
    comps.push_back(a % k);
    a /= k;
  }
  return comps;
}

Symbol Alphabet::from_components(const std::vector<std::uint32_t>& comps) const {
  if (comps.size() != orders_.size())
    fail(Errc::invalid_symbol, "component count does not match alphabet");
  Symbol out = 0;
  std::uint32_t radix = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (comps[i] >= orders_[i]) fail(Errc::invalid_symbol, "component out of range");
    out += comps[i] * radix;
    radix *= orders_[i];
  }
  return out;
}

std::string Alphabet::describe() const {
  std::string s;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(orders_[i]);
  }
  return s;
}

}  // namespace packnorm
