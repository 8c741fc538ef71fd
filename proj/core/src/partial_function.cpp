#include "packnorm/partial_function.hpp"

#include <algorithm>

#include "packnorm/error.hpp"

namespace packnorm {

Window::Window(std::vector<Coord> coords) : coords_(std::move(coords)) {
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
}

Window Window::interval(Coord lo, Coord hi) {
  std::vector<Coord> cs;
  for (Coord c = lo; c < hi; ++c) cs.push_back(c);
  return Window(std::move(cs));
}

bool Window::contains(Coord c) const {
  return std::binary_search(coords_.begin(), coords_.end(), c);
}

std::optional<std::size_t> Window::index_of(Coord c) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  if (it == coords_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - coords_.begin());
}

Coord Window::min() const {
  if (empty()) fail(Errc::bad_input, "min of empty window");
  return coords_.front();
}

Coord Window::max() const {
  if (empty()) fail(Errc::bad_input, "max of empty window");
  return coords_.back();
}

bool Window::subset_of(const Window& other) const {
  return std::includes(other.coords_.begin(), other.coords_.end(), coords_.begin(),
                       coords_.end());
}

bool Window::disjoint(const Window& a, const Window& b) {
  auto ia = a.coords_.begin();
  auto ib = b.coords_.begin();
  while (ia != a.coords_.end() && ib != b.coords_.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

Window Window::set_union(const Window& a, const Window& b) {
  std::vector<Coord> out;
  std::set_union(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
                 std::back_inserter(out));
  return Window(std::move(out));
}

Window Window::intersect(const Window& other) const {
  std::vector<Coord> out;
  std::set_intersection(coords_.begin(), coords_.end(), other.coords_.begin(),
                        other.coords_.end(), std::back_inserter(out));
  return Window(std::move(out));
}

Window Window::minus(const Window& other) const {
  std::vector<Coord> out;
  std::set_difference(coords_.begin(), coords_.end(), other.coords_.begin(),
                      other.coords_.end(), std::back_inserter(out));
  return Window(std::move(out));
}

Window Window::below(Coord bound) const {
  std::vector<Coord> out;
  for (Coord c : coords_)
    if (c < bound) out.push_back(c);
  return Window(std::move(out));
}

Window Window::at_or_above(Coord bound) const {
  std::vector<Coord> out;
  for (Coord c : coords_)
    if (c >= bound) out.push_back(c);
  return Window(std::move(out));
}

PartialFunction::PartialFunction(std::vector<std::pair<Coord, Symbol>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].first == entries_[i].first) {
      if (entries_[i - 1].second == entries_[i].second) continue;  // deduped below
      fail(Errc::incompatible_functions,
           "duplicate coordinate " + std::to_string(entries_[i].first));
    }
  }
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

PartialFunction PartialFunction::constant(const Window& z, Symbol s) {
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(z.size());
  for (Coord c : z.coords()) es.emplace_back(c, s);
  return PartialFunction(std::move(es));
}

Window PartialFunction::domain() const {
  std::vector<Coord> cs;
  cs.reserve(entries_.size());
  for (const auto& [c, s] : entries_) cs.push_back(c);
  return Window(std::move(cs));
}

std::optional<Symbol> PartialFunction::at(Coord c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const auto& e, Coord v) { return e.first < v; });
  if (it == entries_.end() || it->first != c) return std::nullopt;
  return it->second;
}

Symbol PartialFunction::value_at(Coord c) const {
  auto v = at(c);
  if (!v) fail(Errc::missing_coordinate, "coordinate " + std::to_string(c) + " undefined");
  return *v;
}

bool PartialFunction::subfunction_of(const PartialFunction& g) const {
  for (const auto& [c, s] : entries_) {
    auto v = g.at(c);
    if (!v || *v != s) return false;
  }
  return true;
}

bool PartialFunction::compatible_with(const PartialFunction& g) const {
  for (const auto& [c, s] : entries_) {
    auto v = g.at(c);
    if (v && *v != s) return false;
  }
  return true;
}

PartialFunction PartialFunction::restrict_to(const Window& z) const {
  std::vector<std::pair<Coord, Symbol>> es;
  for (const auto& e : entries_)
    if (z.contains(e.first)) es.push_back(e);
  return PartialFunction(std::move(es));
}

PartialFunction PartialFunction::minus_domain(const Window& z) const {
  std::vector<std::pair<Coord, Symbol>> es;
  for (const auto& e : entries_)
    if (!z.contains(e.first)) es.push_back(e);
  return PartialFunction(std::move(es));
}

PartialFunction PartialFunction::with_entry(Coord c, Symbol s) const {
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(entries_.size() + 1);
  for (const auto& e : entries_)
    if (e.first != c) es.push_back(e);
  es.emplace_back(c, s);
  return PartialFunction(std::move(es));
}

PartialFunction pf_union(const PartialFunction& f, const PartialFunction& g) {
  if (!f.compatible_with(g))
    fail(Errc::incompatible_functions, "functions disagree on a shared coordinate");
  std::vector<std::pair<Coord, Symbol>> es = f.entries();
  for (const auto& e : g.entries())
    if (!f.defined(e.first)) es.push_back(e);
  return PartialFunction(std::move(es));
}

PartialFunction translate_pf(const Alphabet& alpha, const PartialFunction& eta,
                             const PartialFunction& v) {
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(eta.size());
  for (const auto& [c, s] : eta.entries()) {
    auto shift = v.at(c);
    if (!shift)
      fail(Errc::missing_coordinate,
           "translation vector undefined at coordinate " + std::to_string(c));
    es.emplace_back(c, alpha.add(s, *shift));
  }
  return PartialFunction(std::move(es));
}

PartialFunction negate_pf(const Alphabet& alpha, const PartialFunction& v) {
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(v.size());
  for (const auto& [c, s] : v.entries()) es.emplace_back(c, alpha.neg(s));
  return PartialFunction(std::move(es));
}

CoordMap::CoordMap(std::vector<std::pair<Coord, Coord>> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first)
      fail(Errc::bad_input, "coordinate map defined twice at a source");
  inverse_.reserve(entries_.size());
  for (const auto& [a, b] : entries_) inverse_.emplace_back(b, a);
  std::sort(inverse_.begin(), inverse_.end());
  for (std::size_t i = 1; i < inverse_.size(); ++i)
    if (inverse_[i - 1].first == inverse_[i].first)
      fail(Errc::bad_input, "coordinate map is not injective");
}

CoordMap CoordMap::identity(const Window& w) {
  std::vector<std::pair<Coord, Coord>> es;
  es.reserve(w.size());
  for (Coord c : w.coords()) es.emplace_back(c, c);
  return CoordMap(std::move(es));
}

CoordMap CoordMap::shift(const Window& w, Coord offset) {
  std::vector<std::pair<Coord, Coord>> es;
  es.reserve(w.size());
  for (Coord c : w.coords()) es.emplace_back(c, c + offset);
  return CoordMap(std::move(es));
}

Window CoordMap::domain() const {
  std::vector<Coord> cs;
  cs.reserve(entries_.size());
  for (const auto& [a, b] : entries_) cs.push_back(a);
  return Window(std::move(cs));
}

Window CoordMap::range() const {
  std::vector<Coord> cs;
  cs.reserve(inverse_.size());
  for (const auto& [b, a] : inverse_) cs.push_back(b);
  return Window(std::move(cs));
}

std::optional<Coord> CoordMap::apply(Coord c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const auto& e, Coord v) { return e.first < v; });
  if (it == entries_.end() || it->first != c) return std::nullopt;
  return it->second;
}

std::optional<Coord> CoordMap::preimage(Coord c) const {
  auto it = std::lower_bound(inverse_.begin(), inverse_.end(), c,
                             [](const auto& e, Coord v) { return e.first < v; });
  if (it == inverse_.end() || it->first != c) return std::nullopt;
  return it->second;
}

Coord CoordMap::apply_or_fail(Coord c) const {
  auto v = apply(c);
  if (!v) fail(Errc::missing_coordinate, "coordinate map undefined at " + std::to_string(c));
  return *v;
}

CoordMap CoordMap::inverse() const {
  std::vector<std::pair<Coord, Coord>> es = inverse_;
  return CoordMap(std::move(es));
}

Window CoordMap::image(const Window& w) const {
  std::vector<Coord> cs;
  cs.reserve(w.size());
  for (Coord c : w.coords()) cs.push_back(apply_or_fail(c));
  return Window(std::move(cs));
}

Window CoordMap::preimage(const Window& w) const {
  std::vector<Coord> cs;
  for (const auto& [b, a] : inverse_)
    if (w.contains(b)) cs.push_back(a);
  return Window(std::move(cs));
}

PartialFunction permute_pf(const PartialFunction& eta, const CoordMap& pi) {
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(eta.size());
  for (const auto& [c, s] : eta.entries()) {
    auto target = pi.apply(c);
    if (!target)
      fail(Errc::missing_coordinate,
           "coordinate map does not cover coordinate " + std::to_string(c));
    es.emplace_back(*target, s);
  }
  return PartialFunction(std::move(es));
}

std::uint64_t point_count_checked(const Alphabet& alpha, std::size_t n_coords,
                                  const Budget& budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n_coords; ++i) {
    if (count > budget.max_points / alpha.size())
      fail(Errc::enumeration_too_large,
           "point count exceeds budget of " + std::to_string(budget.max_points));
    count *= alpha.size();
  }
  if (count > budget.max_points)
    fail(Errc::enumeration_too_large,
         "point count exceeds budget of " + std::to_string(budget.max_points));
  return count;
}

PointEnumerator::PointEnumerator(const Alphabet& alpha, const Window& window,
                                 const Budget& budget)
    : alpha_(alpha), window_(window), current_(window.size(), 0) {
  total_ = point_count_checked(alpha, window.size(), budget);
}

bool PointEnumerator::next(std::vector<Symbol>& out) {
  if (produced_ >= total_) return false;
  if (produced_ == 0) {
    out = current_;
    ++produced_;
    return true;
  }
  // Odometer step, last coordinate fastest.
  std::size_t i = current_.size();
  while (i > 0) {
    --i;
    if (++current_[i] < alpha_.size()) break;
    current_[i] = 0;
  }
  out = current_;
  ++produced_;
  return true;
}

PartialFunction assignment_to_pf(const Window& window, const std::vector<Symbol>& values) {
  if (values.size() != window.size()) fail(Errc::bad_input, "assignment size mismatch");
  std::vector<std::pair<Coord, Symbol>> es;
  es.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    es.emplace_back(window.coords()[i], values[i]);
  return PartialFunction(std::move(es));
}

CompiledPf compile_pf(const Window& window, const PartialFunction& pf) {
  CompiledPf out;
  out.at.reserve(pf.size());
  for (const auto& [c, s] : pf.entries()) {
    auto idx = window.index_of(c);
    if (!idx)
      fail(Errc::missing_coordinate,
           "coordinate " + std::to_string(c) + " outside the window");
    out.at.emplace_back(static_cast<std::uint32_t>(*idx), s);
  }
  return out;
}

bool extends(const std::vector<Symbol>& x, const CompiledPf& c) {
  for (const auto& [pos, s] : c.at)
    if (x[pos] != s) return false;
  return true;
}

}  // namespace packnorm
