#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "packnorm/alphabet.hpp"

namespace packnorm {

using Coord = std::uint32_t;

/// A finite set of coordinates, kept sorted and deduplicated.
class Window {
public:
  Window() = default;
  explicit Window(std::vector<Coord> coords);
  static Window interval(Coord lo, Coord hi);  // [lo, hi)

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const std::vector<Coord>& coords() const { return coords_; }
  bool contains(Coord c) const;
  std::optional<std::size_t> index_of(Coord c) const;
  Coord min() const;
  Coord max() const;

  bool subset_of(const Window& other) const;
  static bool disjoint(const Window& a, const Window& b);
  static Window set_union(const Window& a, const Window& b);
  Window intersect(const Window& other) const;
  Window minus(const Window& other) const;
  // Coordinates strictly below / at-or-above an integer boundary.
  Window below(Coord bound) const;
  Window at_or_above(Coord bound) const;

  bool operator==(const Window& other) const { return coords_ == other.coords_; }
  bool operator<(const Window& other) const { return coords_ < other.coords_; }

private:
  std::vector<Coord> coords_;
};

/// A finite map from coordinates to symbols, kept sorted by coordinate.
class PartialFunction {
public:
  PartialFunction() = default;
  explicit PartialFunction(std::vector<std::pair<Coord, Symbol>> entries);
  static PartialFunction constant(const Window& z, Symbol s);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<Coord, Symbol>>& entries() const { return entries_; }
  Window domain() const;

  bool defined(Coord c) const { return at(c).has_value(); }
  std::optional<Symbol> at(Coord c) const;
  Symbol value_at(Coord c) const;  // missing-coordinate error when undefined

  bool subfunction_of(const PartialFunction& g) const;
  bool compatible_with(const PartialFunction& g) const;
  PartialFunction restrict_to(const Window& z) const;
  PartialFunction minus_domain(const Window& z) const;
  PartialFunction with_entry(Coord c, Symbol s) const;  // overwrites if present

  bool operator==(const PartialFunction& other) const { return entries_ == other.entries_; }
  bool operator<(const PartialFunction& other) const { return entries_ < other.entries_; }

private:
  std::vector<std::pair<Coord, Symbol>> entries_;
};

PartialFunction pf_union(const PartialFunction& f, const PartialFunction& g);
// Pointwise group addition of v on dom(eta); requires dom(eta) within dom(v).
PartialFunction translate_pf(const Alphabet& alpha, const PartialFunction& eta,
                             const PartialFunction& v);
PartialFunction negate_pf(const Alphabet& alpha, const PartialFunction& v);

/// An injective finite coordinate map, the pi of coordinate embeddings.
class CoordMap {
public:
  CoordMap() = default;
  explicit CoordMap(std::vector<std::pair<Coord, Coord>> entries);
  static CoordMap identity(const Window& w);
  static CoordMap shift(const Window& w, Coord offset);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Coord, Coord>>& entries() const { return entries_; }
  Window domain() const;
  Window range() const;
  std::optional<Coord> apply(Coord c) const;
  std::optional<Coord> preimage(Coord c) const;
  Coord apply_or_fail(Coord c) const;
  CoordMap inverse() const;
  Window image(const Window& w) const;     // pi[w], requires w within domain
  Window preimage(const Window& w) const;  // pi^{-1}[w intersect range]

  bool operator==(const CoordMap& other) const { return entries_ == other.entries_; }

private:
  std::vector<std::pair<Coord, Coord>> entries_;   // sorted by source
  std::vector<std::pair<Coord, Coord>> inverse_;   // sorted by target
};

// Result domain is pi[dom(eta)], with value eta(pi^{-1}(i)) at i.
PartialFunction permute_pf(const PartialFunction& eta, const CoordMap& pi);

/// Budgets guarding every brute-force path.
struct Budget {
  std::uint64_t max_points = std::uint64_t{1} << 24;
  std::size_t max_delta = 12;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;  // inclusion-exclusion cap
};

// |X|^n, with an enumeration-too-large error beyond budget.max_points.
std::uint64_t point_count_checked(const Alphabet& alpha, std::size_t n_coords,
                                  const Budget& budget);

/// Lexicographic odometer over all total assignments Window -> X.
/// Values are aligned with window.coords(); the last coordinate varies fastest.
class PointEnumerator {
public:
  PointEnumerator(const Alphabet& alpha, const Window& window, const Budget& budget);
  // Fills `out` with the next assignment; false once exhausted.
  bool next(std::vector<Symbol>& out);
  std::uint64_t total() const { return total_; }

private:
  const Alphabet& alpha_;
  const Window& window_;
  std::vector<Symbol> current_;
  std::uint64_t total_;
  std::uint64_t produced_ = 0;
};

// Total assignment (aligned with window.coords()) as a PartialFunction.
PartialFunction assignment_to_pf(const Window& window, const std::vector<Symbol>& values);

/// A partial function pre-resolved to window positions, for fast containment
/// tests inside enumeration loops.
struct CompiledPf {
  std::vector<std::pair<std::uint32_t, Symbol>> at;  // (position, symbol)
};

CompiledPf compile_pf(const Window& window, const PartialFunction& pf);
bool extends(const std::vector<Symbol>& x, const CompiledPf& c);

}  // namespace packnorm
