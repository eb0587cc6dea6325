#include "polymatroid/flats.hpp"

#include <algorithm>

namespace pm {

bool FlatSet::contains(SubsetId s) const {
  return std::binary_search(flats.begin(), flats.end(), s, display_less);
}

bool is_flat(const RankFunction& rank, SubsetId s) {
  for (int i = 0; i < rank.n(); ++i) {
    if (has_element(s, i)) continue;
    if (rank.at(set_union(s, singleton(i))) == rank.at(s)) return false;
  }
  return true;
}

SubsetId closure(const RankFunction& rank, SubsetId a) {
  // Submodularity makes the one-sweep version exact: every element whose
  // addition keeps the rank belongs to the closure, all at once.
  SubsetId out = a;
  const Rat& base = rank.at(a);
  for (int i = 0; i < rank.n(); ++i) {
    if (has_element(a, i)) continue;
    if (rank.at(set_union(a, singleton(i))) == base) out = set_union(out, singleton(i));
  }
  return out;
}

FlatSet flats(const RankFunction& rank) {
  FlatSet result;
  for (std::uint32_t m = 0; m < rank.subset_count(); ++m) {
    if (is_flat(rank, SubsetId{m})) result.flats.push_back(SubsetId{m});
  }
  std::sort(result.flats.begin(), result.flats.end(), display_less);
  return result;
}

std::vector<FlatPairDefect> nonmodular_flat_pairs(const RankFunction& rank,
                                                  bool intersecting_only) {
  const FlatSet fs = flats(rank);
  std::vector<FlatPairDefect> out;
  for (std::size_t i = 0; i < fs.flats.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.flats.size(); ++j) {
      const SubsetId f1 = fs.flats[i];
      const SubsetId f2 = fs.flats[j];
      if (intersecting_only && is_empty(set_intersect(f1, f2))) continue;
      Rat defect = modular_defect(rank, f1, f2);
      if (defect > 0) out.push_back({f1, f2, std::move(defect)});
    }
  }
  return out;
}

}  // namespace pm
