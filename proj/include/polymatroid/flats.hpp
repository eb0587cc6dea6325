#pragma once

#include <vector>

#include "polymatroid/setfun.hpp"

namespace pm {

// Flats of a rank function, sorted by (cardinality, bitmask).
struct FlatSet {
  std::vector<SubsetId> flats;

  bool contains(SubsetId s) const;
};

// A set is a flat when every proper superset has strictly larger rank.
bool is_flat(const RankFunction& rank, SubsetId s);

// Smallest flat containing A; satisfies f(cl(A)) = f(A).
SubsetId closure(const RankFunction& rank, SubsetId a);

// All flats. The empty set qualifies exactly when every singleton has
// positive rank.
FlatSet flats(const RankFunction& rank);

struct FlatPairDefect {
  SubsetId f1;
  SubsetId f2;
  Rat defect;
};

// Unordered flat pairs with positive modular defect, in deterministic
// (cardinality, bitmask) pair order; restricted to pairs with nonempty
// intersection when `intersecting_only` is set.
std::vector<FlatPairDefect> nonmodular_flat_pairs(const RankFunction& rank,
                                                  bool intersecting_only);

}  // namespace pm
