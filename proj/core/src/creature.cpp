#include "packnorm/creature.hpp"

#include <algorithm>
#include <cmath>

#include "packnorm/error.hpp"
#include "packnorm/matching.hpp"

namespace packnorm {

namespace {

// Max total domain coverage over subfamilies of `mask` with pairwise disjoint
// domains: memoized take/skip recursion on the conflict structure.
class PackingTable {
public:
  PackingTable(const Window& z, const std::vector<PartialFunction>& delta) {
    d_ = delta.size();
    dom_size_.resize(d_);
    conflict_.assign(d_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
      dom_size_[i] = delta[i].size();
      Window di = delta[i].domain();
      for (std::size_t j = 0; j < i; ++j) {
        if (!Window::disjoint(di, delta[j].domain())) {
          conflict_[i] |= (std::uint32_t{1} << j);
          conflict_[j] |= (std::uint32_t{1} << i);
        }
      }
    }
    best_.assign(std::size_t{1} << d_, kUnset);
  }

  std::uint64_t best(std::uint32_t mask) {
    if (mask == 0) return 0;
    std::uint64_t& slot = best_[mask];
    if (slot != kUnset) return slot;
    std::uint32_t low = mask & (~mask + 1);
    std::size_t i = static_cast<std::size_t>(__builtin_ctz(mask));
    std::uint64_t skip = best(mask ^ low);
    std::uint64_t take = dom_size_[i] + best(mask & ~low & ~conflict_[i]);
    slot = std::max(skip, take);
    return slot;
  }

private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::size_t d_;
  std::vector<std::uint64_t> dom_size_;
  std::vector<std::uint32_t> conflict_;
  std::vector<std::uint64_t> best_;
};

std::vector<PartialFunction> canonical_delta(const Window& z,
                                             std::vector<PartialFunction> delta) {
  for (const auto& eta : delta) {
    if (eta.empty()) fail(Errc::bad_input, "constraint family members must be nonempty");
    if (!eta.domain().subset_of(z))
      fail(Errc::bad_input, "constraint domain escapes the creature's coordinate set");
  }
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  return delta;
}

}  // namespace

std::uint64_t norm_n(const Window& z, const std::vector<PartialFunction>& delta,
                     const Budget& budget) {
  if (z.empty()) fail(Errc::bad_input, "coordinate set must be nonempty");
  auto d = canonical_delta(z, delta);
  if (d.empty()) fail(Errc::bad_input, "norm_n needs a nonempty constraint family");
  if (d.size() > budget.max_delta || d.size() > 22)
    fail(Errc::enumeration_too_large,
         "constraint family of size " + std::to_string(d.size()) + " exceeds budget");

  PackingTable table(z, d);
  std::uint64_t n = ~std::uint64_t{0};
  std::uint32_t full = (std::uint32_t{1} << d.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint64_t members = static_cast<std::uint64_t>(__builtin_popcount(mask));
    n = std::min(n, table.best(mask) / members);
    if (n == 0) break;
  }
  return n;
}

Creature Creature::make(Window z, std::vector<PartialFunction> delta, const Budget& budget) {
  Creature t;
  if (z.empty()) fail(Errc::bad_input, "creature coordinate set must be nonempty");
  t.z_ = std::move(z);
  t.delta_ = canonical_delta(t.z_, std::move(delta));
  t.n_ = t.delta_.empty() ? 0 : norm_n(t.z_, t.delta_, budget);
  return t;
}

Creature Creature::unconstrained(Window z) {
  return make(std::move(z), {});
}

double Creature::nor_real() const {
  if (infinite_norm()) return std::numeric_limits<double>::infinity();
  return std::log2(static_cast<double>(n_)) / 3.0;
}

bool Creature::nor_exceeds(const Rational& threshold) const {
  if (infinite_norm()) return true;
  BigInt p = boost::multiprecision::numerator(threshold);
  BigInt q = boost::multiprecision::denominator(threshold);  // q > 0
  // log_8(n) > p/q  <=>  n^q > 8^p, cross-multiplied for negative p.
  BigInt lhs = big_pow(BigInt(n_), q.convert_to<std::uint64_t>());
  if (p >= 0) return lhs > big_pow(8, p.convert_to<std::uint64_t>());
  return lhs * big_pow(8, (-p).convert_to<std::uint64_t>()) > 1;
}

bool Creature::nor_at_least(const Rational& threshold) const {
  if (infinite_norm()) return true;
  BigInt p = boost::multiprecision::numerator(threshold);
  BigInt q = boost::multiprecision::denominator(threshold);
  BigInt lhs = big_pow(BigInt(n_), q.convert_to<std::uint64_t>());
  if (p >= 0) return lhs >= big_pow(8, p.convert_to<std::uint64_t>());
  return lhs * big_pow(8, (-p).convert_to<std::uint64_t>()) >= 1;
}

bool value_member(const Creature& t, const std::vector<Symbol>& x) {
  if (x.size() != t.z().size()) fail(Errc::bad_input, "assignment must be total on z");
  for (const auto& eta : t.delta()) {
    bool contained = true;
    for (const auto& [c, s] : eta.entries()) {
      auto idx = t.z().index_of(c);
      if (x[*idx] != s) {
        contained = false;
        break;
      }
    }
    if (contained) return false;
  }
  return true;
}

bool value_member_pf(const Creature& t, const PartialFunction& x) {
  if (!(x.domain() == t.z())) fail(Errc::bad_input, "assignment must be total on z");
  for (const auto& eta : t.delta())
    if (eta.subfunction_of(x)) return false;
  return true;
}

std::vector<std::vector<Symbol>> value_set(const Alphabet& alpha, const Creature& t,
                                           const Budget& budget) {
  std::vector<std::vector<Symbol>> out;
  PointEnumerator points(alpha, t.z(), budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (value_member(t, x)) out.push_back(x);
  return out;
}

std::uint64_t value_count(const Alphabet& alpha, const Creature& t, const Budget& budget) {
  std::uint64_t count = 0;
  PointEnumerator points(alpha, t.z(), budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (value_member(t, x)) ++count;
  return count;
}

std::vector<Coord> sdr(const std::vector<PartialFunction>& delta) {
  // Right vertices: the union of all domains, in sorted order.
  Window pool;
  for (const auto& eta : delta) pool = Window::set_union(pool, eta.domain());
  BipartiteMatcher matcher(pool.size());
  for (const auto& eta : delta) {
    std::vector<std::size_t> adj;
    for (const auto& [c, s] : eta.entries()) adj.push_back(*pool.index_of(c));
    matcher.add_left(std::move(adj));
  }
  matcher.solve();
  if (!matcher.perfect_left())
    fail(Errc::no_sdr, "Hall's condition fails for the constraint domains");
  std::vector<Coord> reps;
  reps.reserve(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i)
    reps.push_back(pool.coords()[*matcher.matched_right(i)]);
  return reps;
}

PartialFunction witness_value(const Alphabet& alpha, const Creature& t) {
  if (t.infinite_norm()) return PartialFunction::constant(t.z(), 0);
  if (t.n() < 1) fail(Errc::no_witness, "creature has packing number 0");
  std::vector<Coord> reps;
  try {
    reps = sdr(t.delta());
  } catch (const Error& e) {
    fail(Errc::no_witness, "no distinct representatives despite positive norm");
  }
  PartialFunction w = PartialFunction::constant(t.z(), 0);
  for (std::size_t i = 0; i < t.delta().size(); ++i) {
    Symbol forbidden = t.delta()[i].value_at(reps[i]);
    // Smallest symbol differing from the constraint at the representative.
    Symbol pick = (forbidden == 0) ? 1 : 0;
    w = w.with_entry(reps[i], pick);
  }
  if (!value_member_pf(t, w))
    fail(Errc::no_witness, "constructed witness escaped the value set");
  return w;
}

}  // namespace packnorm
