#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "packnorm/creature.hpp"
#include "packnorm/creature_ops.hpp"

namespace packnorm {

enum class Flavor { q_empty, q_plus_infinity };

/// A finite fragment of a forcing condition: a stem w plus a creature list
/// whose coordinate sets, together with dom(w), partition the window.
///
/// Under Flavor::q_plus_infinity every creature must carry a finite norm;
/// the unbounded-growth demand of the infinite setting is represented by an
/// optional nondecreasing per-slot lower-bound profile (slot i in canonical
/// order must have nor strictly above profile[i]).
struct TruncatedCondition {
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  Window window;
  PartialFunction w;
  std::vector<Creature> creatures;  // canonical: ordered by coordinate sets
  Flavor flavor = Flavor::q_plus_infinity;
  std::vector<Rational> bound_profile;  // empty = no declared profile

  bool operator==(const TruncatedCondition& other) const {
    return alpha == other.alpha && window == other.window && w == other.w &&
           creatures == other.creatures && flavor == other.flavor;
  }
};

TruncatedCondition make_condition(Alphabet alpha, Window window, PartialFunction w,
                                  std::vector<Creature> creatures, Flavor flavor,
                                  std::vector<Rational> bound_profile = {});

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;

  void flag(const std::string& issue) {
    ok = false;
    issues.push_back(issue);
  }
};

ValidationReport validate(const TruncatedCondition& p);
void require_valid(const TruncatedCondition& p);

// x is a total assignment on the window, aligned with window.coords().
bool pos_member(const TruncatedCondition& p, const std::vector<Symbol>& x);
std::uint64_t pos_count(const TruncatedCondition& p, const Budget& budget = Budget{});
std::optional<std::vector<Symbol>> pos_example(const TruncatedCondition& p,
                                               const Budget& budget = Budget{});
// POS(q) within POS(p), by enumeration over the shared window.
bool pos_subset(const TruncatedCondition& q, const TruncatedCondition& p,
                const Budget& budget = Budget{});

/// The three order-generating moves.
struct DecideMove {
  std::vector<std::size_t> indices;  // creatures to decide, canonical positions
  PartialFunction w_star;            // full replacement stem
  bool operator==(const DecideMove&) const = default;
};

struct SigmaGroup {
  std::vector<std::size_t> indices;
  Creature replacement;
  bool operator==(const SigmaGroup&) const = default;
};

struct SigmaMove {
  std::vector<SigmaGroup> groups;  // disjoint index groups; others unchanged
  bool operator==(const SigmaMove&) const = default;
};

struct SigmaBotMove {
  std::size_t index;
  std::vector<Creature> pieces;
  bool operator==(const SigmaBotMove&) const = default;
};

using Move = std::variant<DecideMove, SigmaMove, SigmaBotMove>;

/// A replayable strengthening record: applying the moves to the source
/// condition must reproduce the target exactly.
struct MoveCertificate {
  std::vector<Move> moves;
};

// Applies one move under the base-order legality rules; intermediate results
// may leave the q_plus_infinity flavor, endpoints are checked separately.
TruncatedCondition apply_move(const TruncatedCondition& p, const Move& move,
                              const Budget& budget = Budget{});
TruncatedCondition replay(const TruncatedCondition& p, const MoveCertificate& cert,
                          const Budget& budget = Budget{});

// Certificate replay reaches q exactly.
bool leq_check(const TruncatedCondition& p, const TruncatedCondition& q,
               const MoveCertificate& cert, const Budget& budget = Budget{});
// POS(q) within POS(p) by enumeration; desk scale only.
bool leq_semantic(const TruncatedCondition& p, const TruncatedCondition& q,
                  const Budget& budget = Budget{});

/// Bounded certificate search, driven by the structural differences between
/// p and q. Sound: any returned certificate replays to q. Not complete; a
/// miss within the move bound is reported as nullopt.
std::optional<MoveCertificate> leq_bounded_search(const TruncatedCondition& p,
                                                  const TruncatedCondition& q,
                                                  std::size_t max_moves,
                                                  const Budget& budget = Budget{});

// The window-level group/relabeling automorphisms.
TruncatedCondition translate_condition(const TruncatedCondition& p, const PartialFunction& v,
                                       const Budget& budget = Budget{});
TruncatedCondition permute_condition(const TruncatedCondition& p, const CoordMap& pi,
                                     const Budget& budget = Budget{});

}  // namespace packnorm
