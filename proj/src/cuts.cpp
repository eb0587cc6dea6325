#include "polymatroid/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace pm {

namespace {

std::vector<SubsetId> sorted_members(const std::vector<char>& member, std::uint32_t size) {
  std::vector<SubsetId> out;
  for (std::uint32_t m = 0; m < size; ++m) {
    if (member[m]) out.push_back(SubsetId{m});
  }
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

// Adds F1 & F2 for every modular member pair; returns true on change.
bool close_modular_intersections(const RankFunction& rank, std::vector<char>& member,
                                 const std::vector<SubsetId>& universe) {
  bool changed = false;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!member[universe[i].bits]) continue;
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      if (!member[universe[j].bits]) continue;
      const SubsetId meet = set_intersect(universe[i], universe[j]);
      if (member[meet.bits]) continue;
      if (modular_defect(rank, universe[i], universe[j]) == 0) {
        member[meet.bits] = 1;
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

bool ModularCut::contains(SubsetId s) const {
  return std::binary_search(members.begin(), members.end(), s, display_less);
}

bool ModularFilter::contains(SubsetId s) const {
  return std::binary_search(members.begin(), members.end(), s, display_less);
}

ModularCut generate_modular_cut(const RankFunction& rank,
                                std::span<const SubsetId> seeds) {
  const FlatSet fs = flats(rank);
  const std::uint32_t size = rank.subset_count();
  std::vector<char> is_flat_mask(size, 0);
  for (SubsetId f : fs.flats) is_flat_mask[f.bits] = 1;

  std::vector<char> member(size, 0);
  for (SubsetId s : seeds) {
    if (!rank.ground().valid_subset(s))
      throw std::invalid_argument("seed outside ground set");
    if (!is_flat_mask[s.bits])
      throw std::invalid_argument("seed " + rank.ground().subset_name(s) +
                                  " is not a flat");
    member[s.bits] = 1;
  }
  member[rank.ground().full().bits] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    // Upward closure within the flat lattice.
    for (SubsetId f : fs.flats) {
      if (member[f.bits]) continue;
      for (SubsetId g : fs.flats) {
        if (member[g.bits] && is_subset(g, f)) {
          member[f.bits] = 1;
          changed = true;
          break;
        }
      }
    }
    changed = close_modular_intersections(rank, member, fs.flats) || changed;
  }

  ModularCut cut;
  cut.members = sorted_members(member, size);
  cut.seeds.assign(seeds.begin(), seeds.end());
  return cut;
}

bool is_principal_cut(const ModularCut& cut) {
  if (cut.members.empty()) return false;
  SubsetId meet = cut.members.front();
  for (SubsetId f : cut.members) meet = set_intersect(meet, f);
  return cut.contains(meet);
}

ModularFilter generate_modular_filter(const RankFunction& rank,
                                      std::span<const SubsetId> seeds) {
  const std::uint32_t size = rank.subset_count();
  std::vector<SubsetId> universe;
  universe.reserve(size);
  for (std::uint32_t m = 0; m < size; ++m) universe.push_back(SubsetId{m});

  std::vector<char> member(size, 0);
  for (SubsetId s : seeds) {
    if (!rank.ground().valid_subset(s))
      throw std::invalid_argument("seed outside ground set");
    member[s.bits] = 1;
  }
  const Rat& top = rank.at(rank.ground().full());
  for (std::uint32_t m = 0; m < size; ++m) {
    if (rank.at(SubsetId{m}) == top) member[m] = 1;
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Upward closure over all subsets: one ascending sweep per round.
    for (std::uint32_t m = 1; m < size; ++m) {
      if (member[m]) continue;
      std::uint32_t rest = m;
      while (rest) {
        const std::uint32_t low = rest & -rest;
        if (member[m ^ low]) {
          member[m] = 1;
          changed = true;
          break;
        }
        rest ^= low;
      }
    }
    changed = close_modular_intersections(rank, member, universe) || changed;
  }

  ModularFilter filter;
  filter.members = sorted_members(member, size);
  filter.seeds.assign(seeds.begin(), seeds.end());
  return filter;
}

ModularFilter cut_to_filter(const RankFunction& rank, const ModularCut& cut) {
  const std::uint32_t size = rank.subset_count();
  std::vector<char> member(size, 0);
  for (std::uint32_t m = 0; m < size; ++m) {
    if (cut.contains(closure(rank, SubsetId{m}))) member[m] = 1;
  }
  ModularFilter filter;
  filter.members = sorted_members(member, size);
  filter.seeds = cut.seeds;
  return filter;
}

namespace {

void check_modular_closure(const RankFunction& rank,
                           const std::vector<SubsetId>& members,
                           const std::vector<char>& mask, ValidationReport& report) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const SubsetId meet = set_intersect(members[i], members[j]);
      if (mask[meet.bits]) continue;
      Rat defect = modular_defect(rank, members[i], members[j]);
      if (defect == 0) {
        report.valid = false;
        report.violations.push_back(
            {"modular-intersection", members[i], members[j], Rat(0)});
      }
    }
  }
}

}  // namespace

ValidationReport validate_cut(const RankFunction& rank,
                              std::span<const SubsetId> members) {
  ValidationReport report;
  const std::uint32_t size = rank.subset_count();
  std::vector<char> mask(size, 0);
  for (SubsetId s : members) mask[s.bits] = 1;

  std::vector<SubsetId> flat_members(members.begin(), members.end());
  for (SubsetId s : flat_members) {
    if (!is_flat(rank, s)) {
      report.valid = false;
      report.violations.push_back({"member-not-flat", s, s, Rat(0)});
    }
  }
  if (!mask[rank.ground().full().bits]) {
    report.valid = false;
    report.violations.push_back(
        {"missing-ground-set", rank.ground().full(), rank.ground().full(), Rat(0)});
  }
  // Upward closure among flats.
  const FlatSet fs = flats(rank);
  for (SubsetId s : flat_members) {
    if (!mask[s.bits]) continue;
    for (SubsetId f : fs.flats) {
      if (is_subset(s, f) && !mask[f.bits]) {
        report.valid = false;
        report.violations.push_back({"not-upward-closed", s, f, Rat(0)});
      }
    }
  }
  check_modular_closure(rank, flat_members, mask, report);
  return report;
}

ValidationReport validate_filter(const RankFunction& rank,
                                 std::span<const SubsetId> members) {
  ValidationReport report;
  const std::uint32_t size = rank.subset_count();
  std::vector<char> mask(size, 0);
  for (SubsetId s : members) mask[s.bits] = 1;

  std::vector<SubsetId> all(members.begin(), members.end());
  for (SubsetId s : all) {
    for (int i = 0; i < rank.n(); ++i) {
      if (has_element(s, i)) continue;
      const SubsetId up = set_union(s, singleton(i));
      if (!mask[up.bits]) {
        report.valid = false;
        report.violations.push_back({"not-upward-closed", s, up, Rat(0)});
      }
    }
  }
  const Rat& top = rank.at(rank.ground().full());
  for (std::uint32_t m = 0; m < size; ++m) {
    if (rank.at(SubsetId{m}) == top && !mask[m]) {
      report.valid = false;
      report.violations.push_back(
          {"missing-full-rank-set", SubsetId{m}, SubsetId{m}, Rat(0)});
    }
  }
  check_modular_closure(rank, all, mask, report);
  return report;
}

}  // namespace pm
