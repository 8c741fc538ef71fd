#pragma once

#include <utility>
#include <vector>

#include "packnorm/creature.hpp"

namespace packnorm {

/// Restriction to a sub-coordinate-set: keeps members whose domain lies at
/// least half inside z_star, restricted there. The packing number of the
/// result is at least floor(n/2) of the input. empty-restriction error when
/// no member qualifies.
Creature restrict_half(const Creature& t, const Window& z_star,
                       const Budget& budget = Budget{});

/// Composition of creatures with pairwise disjoint coordinate sets: unions
/// the coordinate sets and the constraint families. Packing number of the
/// result is at least the minimum over the members.
Creature glue(const std::vector<Creature>& ts, const Budget& budget = Budget{});

/// Common strengthening of two creatures over the same coordinate set: the
/// union family. Packing number is at least min(floor(n0/2), floor(n1/2));
/// the result may be invalid (n = 0) when the inputs are too weak.
Creature link(const Creature& t0, const Creature& t1, const Budget& budget = Budget{});

/// Splits a creature along z: each side keeps the restrictions of members
/// that lie at least half on it; a side left with no constraints becomes an
/// unconstrained creature. Each side's packing number is at least floor(n/2).
std::pair<Creature, Creature> cut(const Creature& t, const Window& z,
                                  const Budget& budget = Budget{});

/// Composition membership: t is a composition of S iff t is valid, z_t is the
/// union of the members' (pairwise disjoint) coordinate sets, and t's family
/// contains every member's family.
bool sigma_member(const Creature& t, const std::vector<Creature>& members);

/// Decomposition membership: the members' coordinate sets partition z_t and
/// every constraint of t restricts, on some member, to one of that member's
/// constraints.
bool sigma_bot_member(const std::vector<Creature>& pieces, const Creature& t);

/// Pointwise translation by a total assignment v on z; preserves the packing
/// number and shifts the value set.
Creature translate_creature(const Alphabet& alpha, const Creature& t,
                            const PartialFunction& v, const Budget& budget = Budget{});

/// Relabels coordinates along an injective map covering z.
Creature permute_creature(const Creature& t, const CoordMap& pi,
                          const Budget& budget = Budget{});

}  // namespace packnorm
