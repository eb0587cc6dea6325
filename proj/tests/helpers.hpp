#pragma once

// Shared fixtures, generators and independent brute-force oracles. Everything
// here computes from the definitions only, so the library under test never
// checks itself against its own code paths.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "polymatroid/flats.hpp"
#include "polymatroid/io.hpp"
#include "polymatroid/setfun.hpp"

namespace testutil {

using pm::Rat;
using pm::RankFunction;
using pm::SubsetId;

inline RankFunction rank_of(const std::string& line) {
  return pm::parse_polymatroid_line(line);
}

// Rows of the two-, three- and four-element tables (display order).
inline const char* kTwoMa = "1, 0, 1";
inline const char* kTwoMb = "0, 1, 1";
inline const char* kTwoMab = "1, 1, 1";
inline const char* kThreeMa = "1, 0, 0, 1, 1, 0, 1";
inline const char* kThreeMab = "1, 1, 0, 1, 1, 1, 1";
inline const char* kThreeMabc = "1, 1, 1, 1, 1, 1, 1";
inline const char* kThreeMstar = "1, 1, 1, 2, 2, 2, 2";
inline const char* kFourM10 = "1,1,1,2, 2,2,3,2,3,3, 3,3,3,3, 3";
inline const char* kFourM11 = "2,2,2,2, 3,3,3,3,3,4, 4,4,4,4, 4";

inline Rat random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline SubsetId random_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
  return SubsetId{dist(rng)};
}

// Random polymatroid: a sum of 1..3 truncated nonnegative modular functions
// min(r_j, sum of w_j over the subset). Monotone and submodular by
// construction, with honest rational values.
inline RankFunction random_polymatroid(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> term_count(1, 3);
  const int terms = term_count(rng);
  pm::GroundSet ground(n);
  std::vector<Rat> values(ground.subset_count());
  for (int t = 0; t < terms; ++t) {
    std::vector<Rat> weight(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) weight[static_cast<std::size_t>(i)] = random_rational(rng, 4, 3);
    const Rat cap = random_rational(rng, 6, 3);
    for (std::uint32_t m = 1; m < ground.subset_count(); ++m) {
      Rat total = 0;
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1u) total += weight[static_cast<std::size_t>(i)];
      }
      values[m] += std::min(total, cap);
    }
  }
  return RankFunction(std::move(ground), std::move(values));
}

// A random vector that is usually NOT a polymatroid: either pure noise or a
// valid one with a few entries perturbed.
inline RankFunction random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> kind(0, 2);
  pm::GroundSet ground(n);
  if (kind(rng) == 0) {
    std::vector<Rat> values(ground.subset_count());
    for (std::uint32_t m = 1; m < ground.subset_count(); ++m)
      values[m] = random_rational(rng, 5, 2);
    return RankFunction(std::move(ground), std::move(values));
  }
  RankFunction base = random_polymatroid(rng, n);
  std::vector<Rat> values(ground.subset_count());
  for (std::uint32_t m = 1; m < ground.subset_count(); ++m)
    values[m] = base.at(SubsetId{m});
  std::uniform_int_distribution<std::uint32_t> pick(1, ground.subset_count() - 1);
  std::uniform_int_distribution<int> flips(1, 2);
  for (int f = flips(rng); f > 0; --f) {
    const std::uint32_t m = pick(rng);
    Rat delta = random_rational(rng, 3, 2);
    if (kind(rng) == 1) delta = -delta;
    values[m] += delta;
  }
  return RankFunction(std::move(ground), std::move(values));
}

// ---- definition-level oracles -------------------------------------------

inline bool naive_is_flat(const RankFunction& rank, SubsetId s) {
  const std::uint32_t size = rank.subset_count();
  for (std::uint32_t m = 0; m < size; ++m) {
    const SubsetId sup{m};
    if (sup == s || !pm::is_subset(s, sup)) continue;
    if (!(rank.at(sup) > rank.at(s))) return false;
  }
  return true;
}

inline std::vector<SubsetId> naive_flats(const RankFunction& rank) {
  std::vector<SubsetId> out;
  for (std::uint32_t m = 0; m < rank.subset_count(); ++m) {
    if (naive_is_flat(rank, SubsetId{m})) out.push_back(SubsetId{m});
  }
  std::sort(out.begin(), out.end(), pm::display_less);
  return out;
}

// Smallest flat containing A, as the intersection of all flats above A.
inline SubsetId naive_closure(const RankFunction& rank, SubsetId a) {
  SubsetId meet = rank.ground().full();
  for (SubsetId f : naive_flats(rank)) {
    if (pm::is_subset(a, f)) meet = pm::set_intersect(meet, f);
  }
  return meet;
}

}  // namespace testutil
