#include "packnorm/amalgamate.hpp"

#include <algorithm>
#include <set>

#include "packnorm/error.hpp"

namespace packnorm {

namespace {

bool inside(const Creature& t, Coord lo, Coord hi) {
  return t.z().min() >= lo && t.z().max() < hi;
}

bool straddles(const Creature& t, Coord m) {
  return t.z().min() < m && t.z().max() >= m;
}

// Lexicographically smallest boundary sequence satisfying the three block
// clauses: greedy on each boundary, backtracking when a choice strands a
// later block. Boundaries snap to creature right edges, which leaves block
// contents unchanged relative to intermediate values.
class BoundaryChooser {
public:
  BoundaryChooser(const std::vector<TruncatedCondition>& ps, const Slack& slack)
      : ps_(ps), slack_(slack) {
    end_ = ps[0].window.max() + 1;
    std::set<Coord> candidate_set{end_};
    for (const auto& p : ps)
      for (const auto& t : p.creatures) candidate_set.insert(t.z().max() + 1);
    candidates_.assign(candidate_set.begin(), candidate_set.end());
    stem_hi_ = ps[0].w.empty() ? 0 : ps[0].w.domain().max() + 1;
  }

  std::vector<Coord> choose() {
    std::vector<Coord> boundaries;
    if (!extend(boundaries, 0))
      fail(Errc::truncation_too_short,
           "no boundary sequence fits the window under the slack schedule");
    return boundaries;
  }

private:
  bool feasible(Coord prev, Coord m, std::size_t index) const {
    for (const auto& p : ps_) {
      bool has_inside = false;
      for (const auto& t : p.creatures) {
        if (inside(t, prev, m)) {
          has_inside = true;
          break;
        }
      }
      if (!has_inside) return false;
    }
    for (const auto& p : ps_)
      for (const auto& t : p.creatures)
        if (t.z().max() >= m && !t.nor_exceeds(slack_.at(index))) return false;
    return true;
  }

  bool extend(std::vector<Coord>& boundaries, Coord prev) {
    std::size_t index = boundaries.size();
    Coord lower = std::max<Coord>(prev + 1, index == 0 ? stem_hi_ : 0);
    for (const auto& p : ps_)
      for (const auto& t : p.creatures)
        if (t.z().min() < prev)  // already spans the previous boundary
          lower = std::max(lower, t.z().max() + 1);
    for (Coord m : candidates_) {
      if (m < lower || m > end_) continue;
      if (!feasible(prev, m, index)) continue;
      boundaries.push_back(m);
      if (m == end_) return true;
      if (extend(boundaries, m)) return true;
      boundaries.pop_back();
    }
    return false;
  }

  const std::vector<TruncatedCondition>& ps_;
  const Slack& slack_;
  Coord end_ = 0;
  Coord stem_hi_ = 0;
  std::vector<Coord> candidates_;
};

std::uint64_t effective_n(const Creature& t) {
  return t.infinite_norm() ? ~std::uint64_t{0} : t.n();
}

}  // namespace

AmalgamResult amalgamate(const std::vector<TruncatedCondition>& ps, const Slack& slack,
                         const Budget& budget) {
  if (ps.empty()) fail(Errc::bad_input, "amalgamate needs at least one condition");
  const TruncatedCondition& p0 = ps.front();
  for (const auto& p : ps) {
    require_valid(p);
    if (!(p.alpha == p0.alpha) || !(p.window == p0.window))
      fail(Errc::bad_input, "conditions must share the alphabet and window");
    if (p.flavor != Flavor::q_plus_infinity)
      fail(Errc::bad_input, "amalgamation applies to finite-norm conditions");
    if (!(p.w == p0.w)) fail(Errc::bad_input, "conditions must share the stem");
  }

  bool all_bare = std::all_of(ps.begin(), ps.end(),
                              [](const auto& p) { return p.creatures.empty(); });
  if (all_bare) return {p0, std::vector<MoveCertificate>(ps.size()), {}};

  for (const auto& p : ps)
    for (const auto& t : p.creatures)
      if (!t.nor_exceeds(slack.at(0)))
        fail(Errc::insufficient_norm, "input creature norm does not clear slack(0)");

  std::vector<Coord> boundaries = BoundaryChooser(ps, slack).choose();

  // Split every straddler at its boundary, tracking moves per condition.
  std::vector<TruncatedCondition> cut_conditions;
  std::vector<MoveCertificate> certs(ps.size());
  for (std::size_t l = 0; l < ps.size(); ++l) {
    TruncatedCondition cur = ps[l];
    for (Coord m : boundaries) {
      while (true) {
        std::size_t idx = cur.creatures.size();
        for (std::size_t i = 0; i < cur.creatures.size(); ++i) {
          if (straddles(cur.creatures[i], m)) {
            idx = i;
            break;
          }
        }
        if (idx == cur.creatures.size()) break;
        const Creature& t = cur.creatures[idx];
        auto [s0, s1] = cut(t, t.z().below(m), budget);
        if (!s0.valid() || !s1.valid())
          fail(Errc::insufficient_norm, "cutting degenerated a creature to norm 0");
        std::uint64_t half = t.n() / 2;
        if (effective_n(s0) < half || effective_n(s1) < half)
          throw std::logic_error("cut violated its packing-number bound");
        SigmaBotMove move{idx, {s0, s1}};
        cur = apply_move(cur, move, budget);
        certs[l].moves.push_back(std::move(move));
      }
    }
    cut_conditions.push_back(std::move(cur));
  }

  // Per block: compose within each condition, then link the composites.
  std::size_t n_blocks = boundaries.size();
  std::vector<Creature> linked;
  std::vector<std::vector<std::vector<std::size_t>>> block_indices(
      ps.size(), std::vector<std::vector<std::size_t>>(n_blocks));
  for (std::size_t b = 0; b < n_blocks; ++b) {
    Coord lo = (b == 0) ? 0 : boundaries[b - 1];
    Coord hi = boundaries[b];
    std::optional<Creature> merged;
    for (std::size_t l = 0; l < ps.size(); ++l) {
      std::vector<Creature> members;
      for (std::size_t i = 0; i < cut_conditions[l].creatures.size(); ++i) {
        if (inside(cut_conditions[l].creatures[i], lo, hi)) {
          block_indices[l][b].push_back(i);
          members.push_back(cut_conditions[l].creatures[i]);
        }
      }
      if (members.empty())
        fail(Errc::truncation_too_short, "a block ended up without creatures");
      Creature composed = glue(members, budget);
      std::uint64_t member_min = ~std::uint64_t{0};
      for (const auto& s : members) member_min = std::min(member_min, effective_n(s));
      if (effective_n(composed) < member_min)
        throw std::logic_error("composition violated its packing-number bound");
      if (!merged) {
        merged = std::move(composed);
      } else {
        Creature next = link(*merged, composed, budget);
        std::uint64_t bound = std::min(effective_n(*merged) / 2, effective_n(composed) / 2);
        if (effective_n(next) < bound)
          throw std::logic_error("linking violated its packing-number bound");
        merged = std::move(next);
      }
    }
    if (!merged->valid() || merged->infinite_norm())
      fail(Errc::insufficient_norm, "linked block creature degenerated");
    linked.push_back(std::move(*merged));
  }

  TruncatedCondition q =
      make_condition(p0.alpha, p0.window, p0.w, linked, Flavor::q_plus_infinity);

  for (std::size_t l = 0; l < ps.size(); ++l) {
    SigmaMove compose;
    for (std::size_t b = 0; b < n_blocks; ++b)
      compose.groups.push_back(SigmaGroup{block_indices[l][b], linked[b]});
    certs[l].moves.emplace_back(std::move(compose));
    if (!leq_check(ps[l], q, certs[l], budget))
      throw std::logic_error("amalgamation certificate failed to replay");
  }

  return {std::move(q), std::move(certs), std::move(boundaries)};
}

}  // namespace packnorm
