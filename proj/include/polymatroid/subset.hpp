#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pm {

inline constexpr int kMaxGroundSize = 16;

// A subset of the ground set as a bitmask: bit i set <=> element i present.
struct SubsetId {
  std::uint32_t bits = 0;

  constexpr SubsetId() = default;
  constexpr explicit SubsetId(std::uint32_t b) : bits(b) {}

  // Numeric (bitmask) order; display order is a separate comparator.
  friend constexpr auto operator<=>(SubsetId, SubsetId) = default;
};

constexpr SubsetId kEmptySet{0};

constexpr SubsetId singleton(int i) { return SubsetId{1u << i}; }
constexpr SubsetId set_union(SubsetId a, SubsetId b) { return SubsetId{a.bits | b.bits}; }
constexpr SubsetId set_intersect(SubsetId a, SubsetId b) { return SubsetId{a.bits & b.bits}; }
constexpr SubsetId set_difference(SubsetId a, SubsetId b) { return SubsetId{a.bits & ~b.bits}; }
constexpr bool is_subset(SubsetId inner, SubsetId outer) {
  return (inner.bits & ~outer.bits) == 0;
}
constexpr bool has_element(SubsetId s, int i) { return (s.bits >> i) & 1u; }
constexpr int cardinality(SubsetId s) { return std::popcount(s.bits); }
constexpr bool is_empty(SubsetId s) { return s.bits == 0; }

// Report/CLI order used everywhere results are listed: by cardinality,
// then alphabetically (a < b < ...) on the element sequence.
bool display_less(SubsetId a, SubsetId b);

// All nonempty subsets of an n-element ground set in display order.
std::vector<SubsetId> display_order(int n);

// Image of `mask` under the element permutation p (p[i] = new index of i).
std::uint32_t permute_mask(std::uint32_t mask, std::span<const int> p);

// Forward-image tables for all n! element permutations, enumerated in
// lexicographic order of the permutation vector. Each table has 2^n entries.
std::vector<std::vector<std::uint32_t>> all_mask_permutations(int n);

class GroundSet {
 public:
  explicit GroundSet(int n);
  GroundSet(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  std::uint32_t subset_count() const { return 1u << n_; }  // includes the empty set
  SubsetId full() const { return SubsetId{subset_count() - 1}; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool valid_subset(SubsetId s) const { return (s.bits & ~full().bits) == 0; }

  // "ac" for {a,c}; "{}" for the empty set.
  std::string subset_name(SubsetId s) const;
  // Inverse of subset_name; case-sensitive; throws FormatError on unknown labels.
  SubsetId parse_subset(std::string_view name) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
  std::vector<std::string> labels_;
};

}  // namespace pm
