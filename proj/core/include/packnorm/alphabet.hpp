#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace packnorm {

// A symbol is the mixed-radix code of one element of the product group.
using Symbol = std::uint32_t;

/// A finite abelian group given as a product of cyclic groups Z_{k1} x ... x Z_{kr}.
/// Symbols are mixed-radix codes: the element (c1,...,cr) has code
/// c1 + k1*(c2 + k2*(c3 + ...)). Code 0 is the group identity.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::uint32_t> orders);

  static Alphabet cyclic(std::uint32_t order) { return Alphabet({order}); }

  std::uint32_t size() const { return size_; }
  const std::vector<std::uint32_t>& orders() const { return orders_; }

  bool valid(Symbol a) const { return a < size_; }
  void require_valid(Symbol a) const;

  Symbol add(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

  std::vector<std::uint32_t> components(Symbol a) const;
  Symbol from_components(const std::vector<std::uint32_t>& comps) const;

  bool operator==(const Alphabet& other) const { return orders_ == other.orders_; }

  std::string describe() const;

private:
  std::vector<std::uint32_t> orders_;
  std::uint32_t size_;
};

}  // namespace packnorm
