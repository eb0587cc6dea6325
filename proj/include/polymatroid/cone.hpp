#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polymatroid/cuts.hpp"
#include "polymatroid/extend.hpp"
#include "polymatroid/setfun.hpp"

namespace pm {

// One facet inequality of the polymatroid cone, as at most four signed unit
// coefficients on coordinate positions (position = subset bitmask - 1).
struct FacetRow {
  enum class Kind { monotone, submodular };
  Kind kind = Kind::monotone;
  int i = -1;           // first element (monotone: the dropped element)
  int j = -1;           // second element (submodular only)
  SubsetId base;        // K (submodular only)
  int nterms = 0;
  std::array<std::int32_t, 4> pos{};  // coordinate positions
  std::array<std::int8_t, 4> coeff{};

  std::string tag(const GroundSet& ground) const;
};

struct FacetSystem {
  int n = 0;
  int dim = 0;  // 2^n - 1
  std::vector<FacetRow> rows;
};

// The full facet description of the cone of rank vectors on n elements:
// monotone rows f(M) >= f(M-i) first, then the basic submodular rows
// delta(iK,jK) >= 0 sorted by (K, i, j). Row count is C(n,2)*2^(n-2) + n.
FacetSystem facet_inequalities(int n);  // 1 <= n <= 6

// Primitive integer rank vector on an extreme ray, coordinates in bitmask
// order (position = bitmask - 1), gcd of entries 1.
struct ExtremeRay {
  std::vector<std::int64_t> coords;
};

// Rank function with the ray's integer values.
RankFunction ray_rank_function(int n, const ExtremeRay& ray);

struct EnumOptions {
  double budget_seconds = 3600.0;
  std::size_t max_rays = 4'000'000;  // intermediate ray cap
  int jobs = 1;                      // worker threads for the pair scans
};

// Exact double-description enumeration of all extreme rays, deterministically
// sorted by display-order coordinates. Insertion order is the FacetSystem
// order. Throws BudgetError when a limit is hit (the message points at the
// import path) and std::invalid_argument for n > 5.
std::vector<ExtremeRay> enumerate_extreme_rays(const FacetSystem& facets,
                                               const EnumOptions& options = {});

// The extremality test used on imported vectors: the tight facet rows must
// have rank dim - 1.
bool is_extreme(const FacetSystem& facets, const ExtremeRay& ray);

// Ray file format (header "polymatroid-rays v1 n=<n> count=<k>", then one
// comma-separated integer vector per line in display order).
void export_rays(std::ostream& out, int n, std::span<const ExtremeRay> rays);

// Parses, normalizes to primitive vectors, deduplicates, sorts, and verifies
// that every vector is a polymatroid and extreme. Throws FormatError on
// malformed input and ValidationError on a failing vector.
std::vector<ExtremeRay> import_rays(std::istream& in, int n);
std::vector<ExtremeRay> import_rays_file(const std::string& path, int n);

struct IsoClass {
  ExtremeRay representative;  // equal to its own canonical form
  int orbit_size = 0;         // distinct relabelings of the representative
  int member_count = 0;       // input rays in this class
};

// Groups rays by canonical form; classes sorted by canonical vector.
std::vector<IsoClass> classify_isomorphism(int n, std::span<const ExtremeRay> rays);

enum class ElimRule { intersecting_nonmodular, disjoint_nonprincipal };

struct Elimination {
  std::size_t class_index = 0;
  ElimRule rule;
  SubsetId f1;
  SubsetId f2;
  Rat defect;                    // modular defect of the witness pair
  std::optional<ModularCut> cut; // for disjoint_nonprincipal
};

struct FilterOutcome {
  std::vector<std::size_t> survivors;  // indices into the class list
  std::vector<Elimination> eliminated;
};

// Drops every class that (a) has an intersecting non-modular flat pair, or
// (b) has disjoint flats generating a non-principal modular cut. For rule (b)
// the reported witness is the pair whose generated cut is smallest (ties by
// pair order), which keeps certificates short.
FilterOutcome lemma_filter(int n, std::span<const IsoClass> classes);

struct SurvivorVerdict {
  std::size_t class_index = 0;
  bool linear = false;
  std::optional<std::pair<SubsetId, SubsetId>> failing_pair;
};

struct SurvivorReport {
  std::vector<SurvivorVerdict> survivors;     // linearity of each survivor
  std::vector<StarStatus> star_status;        // check_star of every class
  bool all_survivors_linear = true;
  bool any_star_violated = false;
};

// Runs is_linear on the surviving classes and check_star on every class.
SurvivorReport verify_survivors(int n, std::span<const IsoClass> classes,
                                const FilterOutcome& outcome);

}  // namespace pm
