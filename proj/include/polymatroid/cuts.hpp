#pragma once

#include <span>
#include <vector>

#include "polymatroid/flats.hpp"
#include "polymatroid/setfun.hpp"

namespace pm {

// Nonempty collection of flats, upward closed among flats and closed under
// intersection of modular pairs. Members sorted by (cardinality, bitmask).
struct ModularCut {
  std::vector<SubsetId> members;
  std::vector<SubsetId> seeds;

  bool contains(SubsetId s) const;
};

// Collection of arbitrary subsets, upward closed, closed under modular-pair
// intersection, and containing every set of full rank.
struct ModularFilter {
  std::vector<SubsetId> members;
  std::vector<SubsetId> seeds;

  bool contains(SubsetId s) const;
};

// Least modular cut containing the seed flats. Throws std::invalid_argument
// when a seed is not a flat. With no seeds the result is {M}.
ModularCut generate_modular_cut(const RankFunction& rank,
                                std::span<const SubsetId> seeds);

// True iff the intersection of all members is itself a member.
bool is_principal_cut(const ModularCut& cut);

// Least modular filter containing the seeds (always contains every set of
// full rank).
ModularFilter generate_modular_filter(const RankFunction& rank,
                                      std::span<const SubsetId> seeds);

// The preimage of a modular cut under closure: {A : cl(A) in cut}.
ModularFilter cut_to_filter(const RankFunction& rank, const ModularCut& cut);

// Axiom checks, usable both as input validation and as test oracles.
ValidationReport validate_cut(const RankFunction& rank,
                              std::span<const SubsetId> members);
ValidationReport validate_filter(const RankFunction& rank,
                                 std::span<const SubsetId> members);

}  // namespace pm
