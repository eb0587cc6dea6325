#include "polymatroid/subset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polymatroid/rational.hpp"

namespace pm {

bool display_less(SubsetId a, SubsetId b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  // Equal cardinality: the set owning the lowest differing element comes
  // first, which is exactly alphabetical order on the element sequences.
  const std::uint32_t diff = a.bits ^ b.bits;
  return (a.bits & (diff & -diff)) != 0;
}

std::vector<SubsetId> display_order(int n) {
  std::vector<SubsetId> order;
  order.reserve((1u << n) - 1);
  for (std::uint32_t m = 1; m < (1u << n); ++m) order.push_back(SubsetId{m});
  std::sort(order.begin(), order.end(), display_less);
  return order;
}

std::uint32_t permute_mask(std::uint32_t mask, std::span<const int> p) {
  std::uint32_t out = 0;
  while (mask) {
    const int i = std::countr_zero(mask);
    out |= 1u << p[static_cast<std::size_t>(i)];
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> all_mask_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::uint32_t>> tables;
  do {
    std::vector<std::uint32_t> table(1u << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) table[m] = permute_mask(m, p);
    tables.push_back(std::move(table));
  } while (std::next_permutation(p.begin(), p.end()));
  return tables;
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

}  // namespace

GroundSet::GroundSet(int n) : GroundSet(n, default_labels(n)) {}

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground set size must be in [1, 16]");
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("label count does not match ground set size");
  for (int i = 0; i < n; ++i) {
    if (labels_[static_cast<std::size_t>(i)].empty())
      throw std::invalid_argument("empty element label");
    for (int j = i + 1; j < n; ++j) {
      if (labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(j)])
        throw std::invalid_argument("duplicate element label '" +
                                    labels_[static_cast<std::size_t>(i)] + "'");
    }
  }
}

std::string GroundSet::subset_name(SubsetId s) const {
  if (is_empty(s)) return "{}";
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (has_element(s, i)) out += labels_[static_cast<std::size_t>(i)];
  }
  return out;
}

SubsetId GroundSet::parse_subset(std::string_view name) const {
  if (name == "{}" || name.empty()) return kEmptySet;
  SubsetId out;
  std::size_t at = 0;
  while (at < name.size()) {
    bool matched = false;
    // Longest-match against the labels so multi-character labels work too.
    for (int i = 0, best = -1, best_len = 0; i <= n_; ++i) {
      if (i == n_) {
        if (best < 0) break;
        out = set_union(out, singleton(best));
        at += static_cast<std::size_t>(best_len);
        matched = true;
      } else {
        const std::string& lab = labels_[static_cast<std::size_t>(i)];
        if (name.compare(at, lab.size(), lab) == 0 &&
            static_cast<int>(lab.size()) > best_len) {
          best = i;
          best_len = static_cast<int>(lab.size());
        }
      }
    }
    if (!matched)
      throw FormatError("unknown element at '" + std::string(name.substr(at)) + "'");
  }
  return out;
}

}  // namespace pm
