#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polymatroid/cuts.hpp"
#include "polymatroid/flats.hpp"
#include "polymatroid/setfun.hpp"

namespace pm {

// Increment function of a one-point extension: e(A) = f'(xA) - f'(A),
// defined on every subset of M including the empty set.
class ExcessFunction {
 public:
  // `by_mask` has 2^n entries indexed by subset bitmask.
  ExcessFunction(int n, std::vector<Rat> by_mask);

  static ExcessFunction zero(int n);
  static ExcessFunction constant(int n, const Rat& c);

  const Rat& at(SubsetId s) const { return values_[s.bits]; }
  int n() const { return n_; }
  std::uint32_t subset_count() const { return 1u << n_; }

  friend bool operator==(const ExcessFunction&, const ExcessFunction&) = default;

 private:
  int n_;
  std::vector<Rat> values_;
};

// Checks the three excess-function conditions exactly:
//   (i) nonnegative and decreasing,
//   (ii) (e(M)-e(M-i)) + (f(M)-f(M-i)) >= 0,
//   (iii) delta_e(aA,bA) + delta_f(aA,bA) >= 0.
ValidationReport validate_excess(const RankFunction& rank, const ExcessFunction& e);

// The extension f' on M + {x} with f'(A) = f(A) and f'(Ax) = f(A) + e(A).
// Throws ValidationError when `e` is not an excess function for `rank`.
RankFunction one_point_extension(const RankFunction& rank, const ExcessFunction& e);

// The step construction: e(A) = 0 for A in G, and a single small positive
// epsilon otherwise. Epsilon is half the smallest positive value among the
// monotone gaps f(M)-f(M-i) and the facet defects delta(iK,jK); 1 when no
// such value is positive. Throws ValidationError when G is not a modular
// filter for `rank`.
ExcessFunction excess_from_filter(const RankFunction& rank, const ModularFilter& g);

enum class IntersectVerdict { modular, excess_witness, not_intersectable };

struct IntersectabilityWitness {
  IntersectVerdict verdict;
  // For excess_witness: e with e(X) = e(Y) = 0 < e(X&Y).
  std::optional<ExcessFunction> excess;
  // The generated filter G(X,Y); for not_intersectable it contains X&Y.
  std::optional<ModularFilter> filter;
};

// X,Y are intersectable when they form a modular pair or X&Y lies outside
// the filter generated by {X,Y} (then the step excess certifies it).
IntersectabilityWitness is_intersectable(const RankFunction& rank, SubsetId x,
                                         SubsetId y);

struct LinearityReport {
  bool linear = true;
  // First pair (display order) whose intersectability fails, if any.
  std::optional<std::pair<SubsetId, SubsetId>> failing_pair;
};

// A polymatroid is linear when every pair of its subsets is intersectable.
LinearityReport is_linear(const RankFunction& rank);

enum class StarStatus { vacuous, witnessed, violated };

struct StarReport {
  StarStatus status = StarStatus::vacuous;
  // witnessed: the first flat pair (F1,F2) with F1&F2 outside the cut they
  // generate; that cut is necessarily non-principal.
  std::optional<std::pair<SubsetId, SubsetId>> witness_pair;
  std::optional<ModularCut> witness_cut;
  // violated: the complete list of non-modular flat pairs.
  std::vector<FlatPairDefect> nonmodular_pairs;
};

// Decides whether "a non-modular pair of flats implies a non-principal
// modular cut" holds for this polymatroid, with a certificate either way.
StarReport check_star(const RankFunction& rank);

}  // namespace pm
