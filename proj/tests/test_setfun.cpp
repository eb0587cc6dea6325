#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "polymatroid/flats.hpp"
#include "polymatroid/setfun.hpp"

using namespace pm;
using testutil::rank_of;

TEST_CASE("display order follows cardinality then alphabet") {
  const GroundSet g(4);
  const auto order = display_order(4);
  std::string joined;
  for (SubsetId s : order) joined += g.subset_name(s) + " ";
  CHECK(joined ==
        "a b c d ab ac ad bc bd cd abc abd acd bcd abcd ");
}

TEST_CASE("validation accepts the two-element extremals and the zero function") {
  CHECK(validate_polymatroid(rank_of(testutil::kTwoMa), ValidationMode::full).valid);
  CHECK(validate_polymatroid(rank_of(testutil::kTwoMb), ValidationMode::full).valid);
  CHECK(validate_polymatroid(rank_of(testutil::kTwoMab), ValidationMode::full).valid);
  CHECK(validate_polymatroid(RankFunction::zero(GroundSet(3)), ValidationMode::full).valid);
  CHECK(validate_polymatroid(RankFunction::zero(GroundSet(3)), ValidationMode::facet).valid);
}

TEST_CASE("monotonicity violation is reported") {
  const RankFunction bad = rank_of("1, 0, 0");  // f(a)=1 > f(ab)=0
  const auto report = validate_polymatroid(bad, ValidationMode::full);
  CHECK_FALSE(report.valid);
  bool monotone_violation = false;
  for (const auto& v : report.violations) monotone_violation |= v.rule == "monotonicity";
  CHECK(monotone_violation);
  CHECK_FALSE(validate_polymatroid(bad, ValidationMode::facet).valid);
}

TEST_CASE("dimension mismatch is an input error") {
  std::vector<Rat> three(3, Rat(1));
  CHECK_THROWS_AS(RankFunction::from_nonempty(GroundSet(3), three), std::invalid_argument);
}

TEST_CASE("facet-mode and full-mode verdicts agree on random vectors") {
  std::mt19937_64 rng(20240601);
  int valid_seen = 0, invalid_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    const RankFunction f = trial % 2 == 0 ? testutil::random_polymatroid(rng, n)
                                          : testutil::random_vector(rng, n);
    const bool full = validate_polymatroid(f, ValidationMode::full).valid;
    const bool facet = validate_polymatroid(f, ValidationMode::facet).valid;
    CHECK(full == facet);
    (full ? valid_seen : invalid_seen)++;
  }
  CHECK(valid_seen > 50);
  CHECK(invalid_seen > 50);
}

TEST_CASE("modular defect examples") {
  const GroundSet g3(3);
  const RankFunction mstar = rank_of(testutil::kThreeMstar);
  CHECK(modular_defect(mstar, g3.parse_subset("ab"), g3.parse_subset("ac")) == 1);

  const GroundSet g4(4);
  const RankFunction m11 = rank_of(testutil::kFourM11);
  CHECK(modular_defect(m11, g4.parse_subset("ac"), g4.parse_subset("bd")) == 2);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SubsetId a = testutil::random_subset(rng, 3);
    CHECK(modular_defect(mstar, a, a) == 0);
  }
}

TEST_CASE("modular defect is nonnegative on validated input") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const RankFunction f = testutil::random_polymatroid(rng, 3);
    for (std::uint32_t a = 0; a < f.subset_count(); ++a) {
      for (std::uint32_t b = a; b < f.subset_count(); ++b) {
        CHECK(modular_defect(f, SubsetId{a}, SubsetId{b}) >= 0);
        if (is_subset(SubsetId{a}, SubsetId{b}))
          CHECK(f.at(SubsetId{a}) <= f.at(SubsetId{b}));
      }
    }
  }
}

TEST_CASE("contraction examples") {
  const RankFunction mstar = rank_of(testutil::kThreeMstar);
  const GroundSet g3(3);

  CHECK(contract(mstar, kEmptySet) == mstar);

  const RankFunction contracted = contract(mstar, g3.parse_subset("c"));
  CHECK(contracted == rank_of(testutil::kTwoMab));

  // Contracting by a spanning set gives the zero function.
  const RankFunction by_span = contract(mstar, g3.parse_subset("ab"));  // f(ab)=f(M)=2
  for (std::uint32_t m = 0; m < by_span.subset_count(); ++m)
    CHECK(by_span.at(SubsetId{m}) == 0);

  CHECK_THROWS_AS(contract(mstar, g3.full()), std::invalid_argument);
}

TEST_CASE("contraction composes over disjoint sets") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const RankFunction f = testutil::random_polymatroid(rng, 4);
    const GroundSet& g = f.ground();
    const SubsetId s = g.parse_subset("a");
    const SubsetId t_orig = g.parse_subset("c");
    const RankFunction once = contract(f, s);
    // c sits at a new bit position after removing a.
    const SubsetId t_small = once.ground().parse_subset("c");
    const RankFunction twice = contract(once, t_small);
    const RankFunction direct = contract(f, set_union(s, t_orig));
    CHECK(twice == direct);
  }
}

TEST_CASE("contraction of a validated polymatroid validates") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    const RankFunction f = testutil::random_polymatroid(rng, 4);
    const SubsetId s = testutil::random_subset(rng, 4);
    if (s == f.ground().full()) continue;
    CHECK(is_polymatroid(contract(f, s)));
  }
}

TEST_CASE("conic combination examples") {
  const RankFunction ma = rank_of(testutil::kTwoMa);
  const RankFunction mb = rank_of(testutil::kTwoMb);
  const std::pair<Rat, RankFunction> terms[] = {{Rat(1), ma}, {Rat(1), mb}};
  const RankFunction sum = conic_combination(terms);
  CHECK(sum == rank_of("1, 1, 2"));

  const std::pair<Rat, RankFunction> zero_terms[] = {{Rat(0), ma}};
  const RankFunction zero = conic_combination(zero_terms);
  CHECK(zero == RankFunction::zero(GroundSet(2)));

  // Scaling preserves the flats.
  const RankFunction mstar = rank_of(testutil::kThreeMstar);
  const std::pair<Rat, RankFunction> scaled_terms[] = {{Rat(3, 2), mstar}};
  const RankFunction scaled = conic_combination(scaled_terms);
  CHECK(flats(scaled).flats == flats(mstar).flats);

  const std::pair<Rat, RankFunction> bad_coeff[] = {{Rat(-1), ma}};
  CHECK_THROWS_AS(conic_combination(bad_coeff), std::invalid_argument);
  const std::pair<Rat, RankFunction> mixed[] = {{Rat(1), ma}, {Rat(1), mstar}};
  CHECK_THROWS_AS(conic_combination(mixed), std::invalid_argument);
}

TEST_CASE("conic combinations of valid inputs validate") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    const std::pair<Rat, RankFunction> terms[] = {
        {testutil::random_rational(rng, 3, 2), testutil::random_polymatroid(rng, 3)},
        {testutil::random_rational(rng, 3, 2), testutil::random_polymatroid(rng, 3)}};
    CHECK(is_polymatroid(conic_combination(terms)));
  }
}

TEST_CASE("canonical form identifies relabelings") {
  const RankFunction ma = rank_of(testutil::kTwoMa);
  const RankFunction mb = rank_of(testutil::kTwoMb);
  CHECK(canonical_form(ma) == canonical_form(mb));
  CHECK_FALSE(canonical_form(ma) == canonical_form(rank_of(testutil::kTwoMab)));

  // Fully symmetric vectors are their own canonical form.
  const RankFunction mabc = rank_of(testutil::kThreeMabc);
  CHECK(canonical_form(mabc) == mabc);
}

TEST_CASE("canonical form is idempotent and permutation-invariant") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(trial % 2);
    const RankFunction f = testutil::random_polymatroid(rng, n);
    const RankFunction canon = canonical_form(f);
    CHECK(canonical_form(canon) == canon);

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_form(permute(f, p)) == canon);
  }
}

TEST_CASE("restriction keeps the ranks of the kept subsets") {
  const RankFunction mstar = rank_of(testutil::kThreeMstar);
  const GroundSet g3(3);
  const RankFunction r = restrict(mstar, g3.parse_subset("ab"));
  CHECK(r == rank_of("1, 1, 2"));
  CHECK_THROWS_AS(restrict(mstar, kEmptySet), std::invalid_argument);
}
