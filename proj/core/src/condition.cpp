#include "packnorm/condition.hpp"

#include <algorithm>
#include <set>

#include "packnorm/error.hpp"

namespace packnorm {

namespace {

std::vector<Creature> canonicalize(std::vector<Creature> creatures) {
  std::sort(creatures.begin(), creatures.end());
  return creatures;
}

void check_indices(const std::vector<std::size_t>& indices, std::size_t size) {
  std::set<std::size_t> seen;
  for (auto i : indices) {
    if (i >= size) fail(Errc::bad_input, "creature index out of range");
    if (!seen.insert(i).second) fail(Errc::bad_input, "duplicate creature index");
  }
}

}  // namespace

TruncatedCondition make_condition(Alphabet alpha, Window window, PartialFunction w,
                                  std::vector<Creature> creatures, Flavor flavor,
                                  std::vector<Rational> bound_profile) {
  TruncatedCondition p;
  p.alpha = std::move(alpha);
  p.window = std::move(window);
  p.w = std::move(w);
  p.creatures = canonicalize(std::move(creatures));
  p.flavor = flavor;
  p.bound_profile = std::move(bound_profile);
  return p;
}

ValidationReport validate(const TruncatedCondition& p) {
  ValidationReport report;
  for (const auto& [c, s] : p.w.entries()) {
    if (!p.window.contains(c)) report.flag("stem coordinate outside window");
    if (!p.alpha.valid(s)) report.flag("stem symbol out of range");
  }
  Window covered = p.w.domain();
  for (std::size_t i = 0; i < p.creatures.size(); ++i) {
    const Creature& t = p.creatures[i];
    if (!t.valid()) report.flag("creature " + std::to_string(i) + " is invalid (norm 0)");
    if (!t.z().subset_of(p.window))
      report.flag("creature " + std::to_string(i) + " escapes the window");
    if (!Window::disjoint(covered, t.z()))
      report.flag("creature " + std::to_string(i) + " overlaps the stem or another creature");
    covered = Window::set_union(covered, t.z());
  }
  if (!(covered == p.window)) report.flag("stem and creatures do not cover the window");
  if (p.flavor == Flavor::q_plus_infinity) {
    for (std::size_t i = 0; i < p.creatures.size(); ++i)
      if (p.creatures[i].infinite_norm())
        report.flag("creature " + std::to_string(i) + " has infinite norm");
    if (!p.bound_profile.empty()) {
      if (p.bound_profile.size() < p.creatures.size())
        report.flag("bound profile shorter than the creature list");
      for (std::size_t i = 1; i < p.bound_profile.size(); ++i)
        if (p.bound_profile[i] < p.bound_profile[i - 1])
          report.flag("bound profile must be nondecreasing");
      for (std::size_t i = 0; i < p.creatures.size() && i < p.bound_profile.size(); ++i)
        if (!p.creatures[i].nor_exceeds(p.bound_profile[i]))
          report.flag("creature " + std::to_string(i) + " violates its profile bound");
    }
  }
  return report;
}

void require_valid(const TruncatedCondition& p) {
  auto report = validate(p);
  if (!report.ok) fail(Errc::bad_input, "invalid condition: " + report.issues.front());
}

bool pos_member(const TruncatedCondition& p, const std::vector<Symbol>& x) {
  if (x.size() != p.window.size()) fail(Errc::bad_input, "assignment must be total on window");
  for (const auto& [c, s] : p.w.entries())
    if (x[*p.window.index_of(c)] != s) return false;
  for (const auto& t : p.creatures) {
    for (const auto& eta : t.delta()) {
      bool contained = true;
      for (const auto& [c, s] : eta.entries()) {
        if (x[*p.window.index_of(c)] != s) {
          contained = false;
          break;
        }
      }
      if (contained) return false;
    }
  }
  return true;
}

namespace {

// Constraints resolved to window positions: the stem must match, no
// forbidden cylinder may be contained.
struct CompiledCondition {
  CompiledPf stem;
  std::vector<CompiledPf> forbidden;
};

CompiledCondition compile_condition(const TruncatedCondition& p) {
  CompiledCondition out;
  out.stem = compile_pf(p.window, p.w);
  for (const auto& t : p.creatures)
    for (const auto& eta : t.delta()) out.forbidden.push_back(compile_pf(p.window, eta));
  return out;
}

bool compiled_member(const std::vector<Symbol>& x, const CompiledCondition& c) {
  if (!extends(x, c.stem)) return false;
  for (const auto& eta : c.forbidden)
    if (extends(x, eta)) return false;
  return true;
}

}  // namespace

std::uint64_t pos_count(const TruncatedCondition& p, const Budget& budget) {
  auto compiled = compile_condition(p);
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  std::uint64_t count = 0;
  while (points.next(x))
    if (compiled_member(x, compiled)) ++count;
  return count;
}

std::optional<std::vector<Symbol>> pos_example(const TruncatedCondition& p,
                                               const Budget& budget) {
  auto compiled = compile_condition(p);
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (compiled_member(x, compiled)) return x;
  return std::nullopt;
}

bool pos_subset(const TruncatedCondition& q, const TruncatedCondition& p,
                const Budget& budget) {
  if (!(q.window == p.window) || !(q.alpha == p.alpha))
    fail(Errc::bad_input, "POS comparison needs a shared window and alphabet");
  auto cq = compile_condition(q);
  auto cp = compile_condition(p);
  PointEnumerator points(q.alpha, q.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (compiled_member(x, cq) && !compiled_member(x, cp)) return false;
  return true;
}

namespace {

TruncatedCondition apply_decide(const TruncatedCondition& p, const DecideMove& m) {
  check_indices(m.indices, p.creatures.size());
  if (!p.w.subfunction_of(m.w_star))
    fail(Errc::illegal_decision, "new stem must extend the old stem");
  Window expected = p.w.domain();
  for (auto i : m.indices) expected = Window::set_union(expected, p.creatures[i].z());
  if (!(m.w_star.domain() == expected))
    fail(Errc::illegal_decision, "new stem domain must be the old stem plus decided creatures");
  for (auto i : m.indices) {
    const Creature& t = p.creatures[i];
    if (!value_member_pf(t, m.w_star.restrict_to(t.z())))
      fail(Errc::illegal_decision,
           "decided values land outside the value set of creature " + std::to_string(i));
  }
  std::vector<Creature> rest;
  for (std::size_t i = 0; i < p.creatures.size(); ++i)
    if (std::find(m.indices.begin(), m.indices.end(), i) == m.indices.end())
      rest.push_back(p.creatures[i]);
  return make_condition(p.alpha, p.window, m.w_star, std::move(rest), p.flavor);
}

TruncatedCondition apply_sigma(const TruncatedCondition& p, const SigmaMove& m) {
  std::vector<std::size_t> all;
  for (const auto& g : m.groups) {
    if (g.indices.empty()) fail(Errc::illegal_composition, "empty composition group");
    all.insert(all.end(), g.indices.begin(), g.indices.end());
  }
  check_indices(all, p.creatures.size());
  std::vector<Creature> out;
  for (const auto& g : m.groups) {
    std::vector<Creature> members;
    for (auto i : g.indices) members.push_back(p.creatures[i]);
    if (!sigma_member(g.replacement, members))
      fail(Errc::illegal_composition, "replacement is not a composition of its group");
    out.push_back(g.replacement);
  }
  for (std::size_t i = 0; i < p.creatures.size(); ++i)
    if (std::find(all.begin(), all.end(), i) == all.end()) out.push_back(p.creatures[i]);
  return make_condition(p.alpha, p.window, p.w, std::move(out), p.flavor);
}

TruncatedCondition apply_sigma_bot(const TruncatedCondition& p, const SigmaBotMove& m) {
  if (m.index >= p.creatures.size()) fail(Errc::bad_input, "creature index out of range");
  if (!sigma_bot_member(m.pieces, p.creatures[m.index]))
    fail(Errc::illegal_decomposition, "pieces do not decompose the creature");
  std::vector<Creature> out;
  for (std::size_t i = 0; i < p.creatures.size(); ++i) {
    if (i == m.index)
      out.insert(out.end(), m.pieces.begin(), m.pieces.end());
    else
      out.push_back(p.creatures[i]);
  }
  return make_condition(p.alpha, p.window, p.w, std::move(out), p.flavor);
}

}  // namespace

TruncatedCondition apply_move(const TruncatedCondition& p, const Move& move, const Budget&) {
  return std::visit(
      [&](const auto& m) -> TruncatedCondition {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecideMove>) return apply_decide(p, m);
        if constexpr (std::is_same_v<T, SigmaMove>) return apply_sigma(p, m);
        if constexpr (std::is_same_v<T, SigmaBotMove>) return apply_sigma_bot(p, m);
      },
      move);
}

TruncatedCondition replay(const TruncatedCondition& p, const MoveCertificate& cert,
                          const Budget& budget) {
  TruncatedCondition cur = p;
  for (const auto& move : cert.moves) cur = apply_move(cur, move, budget);
  return cur;
}

bool leq_check(const TruncatedCondition& p, const TruncatedCondition& q,
               const MoveCertificate& cert, const Budget& budget) {
  try {
    return replay(p, cert, budget) == q;
  } catch (const Error&) {
    return false;
  }
}

bool leq_semantic(const TruncatedCondition& p, const TruncatedCondition& q,
                  const Budget& budget) {
  return pos_subset(q, p, budget);
}

namespace {

// Candidate moves directed at the target's structure: decide toward the
// target stem, decompose along target coordinate sets, compose groups whose
// union matches a target creature.
std::vector<Move> candidate_moves(const TruncatedCondition& cur, const TruncatedCondition& q,
                                  const Budget& budget) {
  std::vector<Move> out;

  if (!(cur.w == q.w)) {
    std::vector<std::size_t> indices;
    Window gained = q.w.domain().minus(cur.w.domain());
    for (std::size_t i = 0; i < cur.creatures.size(); ++i)
      if (cur.creatures[i].z().subset_of(gained)) indices.push_back(i);
    Window decided = cur.w.domain();
    for (auto i : indices) decided = Window::set_union(decided, cur.creatures[i].z());
    DecideMove m{indices, q.w.restrict_to(decided)};
    try {
      apply_move(cur, m, budget);
      out.emplace_back(m);
    } catch (const Error&) {
    }
  }

  for (std::size_t i = 0; i < cur.creatures.size(); ++i) {
    const Creature& t = cur.creatures[i];
    // Target creatures inside t's coordinate set suggest where to split.
    std::vector<Creature> inside;
    for (const auto& u : q.creatures)
      if (u.z().subset_of(t.z()) && !(u.z() == t.z())) inside.push_back(u);
    if (!inside.empty()) {
      Window unioned;
      for (const auto& u : inside) unioned = Window::set_union(unioned, u.z());
      if (unioned == t.z() && sigma_bot_member(inside, t))
        out.emplace_back(SigmaBotMove{i, inside});
      for (const auto& u : inside) {
        try {
          auto [s0, s1] = cut(t, u.z(), budget);
          if (s0.valid() && s1.valid()) out.emplace_back(SigmaBotMove{i, {s0, s1}});
        } catch (const Error&) {
        }
      }
    }
  }

  SigmaMove compose;
  for (const auto& u : q.creatures) {
    std::vector<std::size_t> group;
    Window unioned;
    for (std::size_t i = 0; i < cur.creatures.size(); ++i) {
      if (cur.creatures[i].z().subset_of(u.z())) {
        group.push_back(i);
        unioned = Window::set_union(unioned, cur.creatures[i].z());
      }
    }
    if (!group.empty() && unioned == u.z()) {
      std::vector<Creature> members;
      for (auto i : group) members.push_back(cur.creatures[i]);
      if (sigma_member(u, members)) compose.groups.push_back(SigmaGroup{group, u});
    }
  }
  if (!compose.groups.empty()) out.emplace_back(compose);

  return out;
}

}  // namespace

std::optional<MoveCertificate> leq_bounded_search(const TruncatedCondition& p,
                                                  const TruncatedCondition& q,
                                                  std::size_t max_moves,
                                                  const Budget& budget) {
  if (!(p.window == q.window) || !(p.alpha == q.alpha) || p.flavor != q.flavor)
    return std::nullopt;
  struct State {
    TruncatedCondition cond;
    MoveCertificate cert;
  };
  std::vector<State> frontier{{p, {}}};
  std::vector<TruncatedCondition> seen{p};
  for (std::size_t depth = 0; depth <= max_moves; ++depth) {
    std::vector<State> next;
    for (const auto& state : frontier) {
      if (state.cond == q) return state.cert;
      if (depth == max_moves) continue;
      for (const auto& move : candidate_moves(state.cond, q, budget)) {
        TruncatedCondition stepped;
        try {
          stepped = apply_move(state.cond, move, budget);
        } catch (const Error&) {
          continue;
        }
        if (std::find(seen.begin(), seen.end(), stepped) != seen.end()) continue;
        seen.push_back(stepped);
        MoveCertificate cert = state.cert;
        cert.moves.push_back(move);
        next.push_back({std::move(stepped), std::move(cert)});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

TruncatedCondition translate_condition(const TruncatedCondition& p, const PartialFunction& v,
                                       const Budget& budget) {
  if (!p.window.subset_of(v.domain()))
    fail(Errc::missing_coordinate, "translation assignment must cover the window");
  std::vector<Creature> creatures;
  creatures.reserve(p.creatures.size());
  for (const auto& t : p.creatures)
    creatures.push_back(translate_creature(p.alpha, t, v.restrict_to(t.z()), budget));
  return make_condition(p.alpha, p.window, translate_pf(p.alpha, p.w, v),
                        std::move(creatures), p.flavor, p.bound_profile);
}

TruncatedCondition permute_condition(const TruncatedCondition& p, const CoordMap& pi,
                                     const Budget& budget) {
  if (!p.window.subset_of(pi.domain()))
    fail(Errc::missing_coordinate, "coordinate map must cover the window");
  std::vector<Creature> creatures;
  creatures.reserve(p.creatures.size());
  for (const auto& t : p.creatures) creatures.push_back(permute_creature(t, pi, budget));
  return make_condition(p.alpha, pi.image(p.window), permute_pf(p.w, pi),
                        std::move(creatures), p.flavor, p.bound_profile);
}

}  // namespace packnorm
