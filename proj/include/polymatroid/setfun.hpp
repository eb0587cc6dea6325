#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polymatroid/rational.hpp"
#include "polymatroid/subset.hpp"

namespace pm {

// Rank function of a polymatroid candidate: one exact rational per subset,
// indexed by bitmask, with f(empty) fixed at 0. Immutable value type.
class RankFunction {
 public:
  // `by_mask` has 2^n entries indexed by subset bitmask; entry 0 must be 0.
  RankFunction(GroundSet ground, std::vector<Rat> by_mask);

  // From the 2^n - 1 values of the nonempty subsets in bitmask order.
  static RankFunction from_nonempty(GroundSet ground, std::span<const Rat> values);
  static RankFunction zero(GroundSet ground);

  const Rat& at(SubsetId s) const { return values_[s.bits]; }
  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::uint32_t subset_count() const { return ground_.subset_count(); }

  // Values of the nonempty subsets in display order (cardinality, then
  // alphabetical) -- the order used by all text formats and reports.
  std::vector<Rat> display_values() const;

  friend bool operator==(const RankFunction& a, const RankFunction& b) {
    return a.ground_ == b.ground_ && a.values_ == b.values_;
  }

 private:
  GroundSet ground_;
  std::vector<Rat> values_;
};

enum class ValidationMode { full, facet };

struct Violation {
  std::string rule;  // e.g. "monotonicity", "submodularity", "nonnegativity"
  SubsetId a;
  SubsetId b;
  Rat slack;  // the violated quantity (negative)
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// `full` checks nonnegativity, every monotone pair and every submodular pair.
// `facet` checks only the facet system: delta(iK,jK) >= 0 for distinct
// i,j not in K, plus f(M) >= f(M-i). Both accept exactly the same vectors.
ValidationReport validate_polymatroid(const RankFunction& rank, ValidationMode mode);

// Facet-mode validity without the report.
bool is_polymatroid(const RankFunction& rank);

// f(A) + f(B) - f(A|B) - f(A&B). Nonnegative on validated input.
Rat modular_defect(const RankFunction& rank, SubsetId a, SubsetId b);

// Contraction f/S on ground set M - S: A |-> f(A|S) - f(S).
// Throws std::invalid_argument when S = M (empty ground sets are rejected).
RankFunction contract(const RankFunction& rank, SubsetId s);

// Restriction to S (on ground set S, labels preserved). Plumbing helper.
RankFunction restrict(const RankFunction& rank, SubsetId s);

// Pointwise nonnegative combination; all terms must share one ground set.
RankFunction conic_combination(
    std::span<const std::pair<Rat, RankFunction>> terms);

// Relabeling by an element permutation: result(p(A)) = rank(A).
RankFunction permute(const RankFunction& rank, std::span<const int> p);

// Lexicographically smallest display-order vector over all n! relabelings.
// Two rank functions are isomorphic iff their canonical forms are equal.
RankFunction canonical_form(const RankFunction& rank);

}  // namespace pm
