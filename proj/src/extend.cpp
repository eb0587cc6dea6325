#include "polymatroid/extend.hpp"

#include <algorithm>
#include <stdexcept>

namespace pm {

ExcessFunction::ExcessFunction(int n, std::vector<Rat> by_mask)
    : n_(n), values_(std::move(by_mask)) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground set size");
  if (values_.size() != (1u << n))
    throw std::invalid_argument("excess vector has wrong dimension");
}

ExcessFunction ExcessFunction::zero(int n) {
  return ExcessFunction(n, std::vector<Rat>(1u << n));
}

ExcessFunction ExcessFunction::constant(int n, const Rat& c) {
  return ExcessFunction(n, std::vector<Rat>(1u << n, c));
}

ValidationReport validate_excess(const RankFunction& rank, const ExcessFunction& e) {
  if (e.n() != rank.n()) throw std::invalid_argument("excess dimension mismatch");
  ValidationReport report;
  const int n = rank.n();
  const std::uint32_t size = rank.subset_count();
  const SubsetId full = rank.ground().full();

  auto flag = [&](const char* rule, SubsetId a, SubsetId b, Rat slack) {
    report.valid = false;
    report.violations.push_back({rule, a, b, std::move(slack)});
  };

  // (i) nonnegative and decreasing, checked on all containment pairs.
  if (e.at(full) < 0) flag("excess-negative", full, full, Rat(e.at(full)));
  for (std::uint32_t b = 0; b < size; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      if (a != b) {
        Rat slack = e.at(SubsetId{a}) - e.at(SubsetId{b});
        if (slack < 0) flag("excess-not-decreasing", SubsetId{a}, SubsetId{b},
                            std::move(slack));
      }
      if (a == 0) break;
    }
  }
  // (ii) joint monotonicity at the top.
  for (int i = 0; i < n; ++i) {
    const SubsetId rest = set_difference(full, singleton(i));
    Rat slack = (e.at(full) - e.at(rest)) + (rank.at(full) - rank.at(rest));
    if (slack < 0) flag("joint-monotonicity", rest, full, std::move(slack));
  }
  // (iii) joint submodularity on the facet triples.
  for (std::uint32_t k = 0; k < size; ++k) {
    const SubsetId K{k};
    for (int a = 0; a < n; ++a) {
      if (has_element(K, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (has_element(K, b)) continue;
        const SubsetId aK = set_union(K, singleton(a));
        const SubsetId bK = set_union(K, singleton(b));
        const SubsetId abK = set_union(aK, bK);
        Rat slack = (e.at(aK) + e.at(bK) - e.at(abK) - e.at(K)) +
                    (rank.at(aK) + rank.at(bK) - rank.at(abK) - rank.at(K));
        if (slack < 0) flag("joint-submodularity", aK, bK, std::move(slack));
      }
    }
  }
  return report;
}

RankFunction one_point_extension(const RankFunction& rank, const ExcessFunction& e) {
  const ValidationReport check = validate_excess(rank, e);
  if (!check.valid)
    throw ValidationError("not an excess function for this polymatroid");

  const GroundSet& ground = rank.ground();
  if (ground.size() >= kMaxGroundSize)
    throw std::invalid_argument("ground set too large to extend");

  // First default letter not already used as a label.
  std::string new_label;
  for (char c = 'a'; c <= 'p'; ++c) {
    std::string cand(1, c);
    if (std::find(ground.labels().begin(), ground.labels().end(), cand) ==
        ground.labels().end()) {
      new_label = cand;
      break;
    }
  }
  if (new_label.empty()) new_label = "x";

  std::vector<std::string> labels = ground.labels();
  labels.push_back(new_label);
  GroundSet big(ground.size() + 1, std::move(labels));

  const std::uint32_t small_size = rank.subset_count();
  std::vector<Rat> values(big.subset_count());
  for (std::uint32_t m = 0; m < small_size; ++m) {
    values[m] = rank.at(SubsetId{m});
    values[m | small_size] = rank.at(SubsetId{m}) + e.at(SubsetId{m});
  }
  return RankFunction(std::move(big), std::move(values));
}

ExcessFunction excess_from_filter(const RankFunction& rank, const ModularFilter& g) {
  const ValidationReport check = validate_filter(rank, g.members);
  if (!check.valid) throw ValidationError("not a modular filter for this polymatroid");

  const int n = rank.n();
  const std::uint32_t size = rank.subset_count();
  const SubsetId full = rank.ground().full();

  // Epsilon must undercut every positive monotone gap and facet defect.
  std::optional<Rat> smallest;
  auto consider = [&](Rat v) {
    if (v > 0 && (!smallest || v < *smallest)) smallest = std::move(v);
  };
  for (int i = 0; i < n; ++i)
    consider(rank.at(full) - rank.at(set_difference(full, singleton(i))));
  for (std::uint32_t k = 0; k < size; ++k) {
    const SubsetId K{k};
    for (int a = 0; a < n; ++a) {
      if (has_element(K, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (has_element(K, b)) continue;
        consider(modular_defect(rank, set_union(K, singleton(a)),
                                set_union(K, singleton(b))));
      }
    }
  }
  const Rat epsilon = smallest ? *smallest / 2 : Rat(1);

  std::vector<Rat> values(size, epsilon);
  for (SubsetId s : g.members) values[s.bits] = 0;
  return ExcessFunction(n, std::move(values));
}

IntersectabilityWitness is_intersectable(const RankFunction& rank, SubsetId x,
                                         SubsetId y) {
  if (modular_defect(rank, x, y) == 0)
    return {IntersectVerdict::modular, std::nullopt, std::nullopt};

  const SubsetId seeds[] = {x, y};
  ModularFilter g = generate_modular_filter(rank, seeds);
  const SubsetId meet = set_intersect(x, y);
  if (g.contains(meet))
    return {IntersectVerdict::not_intersectable, std::nullopt, std::move(g)};

  ExcessFunction e = excess_from_filter(rank, g);
  return {IntersectVerdict::excess_witness, std::move(e), std::move(g)};
}

LinearityReport is_linear(const RankFunction& rank) {
  const auto order = display_order(rank.n());
  // Nested pairs are modular outright, so only incomparable pairs matter.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const SubsetId x = order[i];
      const SubsetId y = order[j];
      if (is_subset(x, y) || is_subset(y, x)) continue;
      const IntersectabilityWitness w = is_intersectable(rank, x, y);
      if (w.verdict == IntersectVerdict::not_intersectable)
        return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

StarReport check_star(const RankFunction& rank) {
  const FlatSet fs = flats(rank);
  StarReport report;

  bool any_nonmodular = false;
  for (std::size_t i = 0; i < fs.flats.size() && !any_nonmodular; ++i) {
    for (std::size_t j = i + 1; j < fs.flats.size(); ++j) {
      if (modular_defect(rank, fs.flats[i], fs.flats[j]) > 0) {
        any_nonmodular = true;
        break;
      }
    }
  }
  if (!any_nonmodular) {
    report.status = StarStatus::vacuous;
    return report;
  }

  // First witness pair in (cardinality, bitmask) pair order. Modular pairs
  // can never witness: the generated cut keeps their intersection.
  for (std::size_t i = 0; i < fs.flats.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.flats.size(); ++j) {
      const SubsetId f1 = fs.flats[i];
      const SubsetId f2 = fs.flats[j];
      if (modular_defect(rank, f1, f2) == 0) continue;
      const SubsetId seeds[] = {f1, f2};
      ModularCut cut = generate_modular_cut(rank, seeds);
      if (!cut.contains(set_intersect(f1, f2))) {
        report.status = StarStatus::witnessed;
        report.witness_pair = std::make_pair(f1, f2);
        report.witness_cut = std::move(cut);
        return report;
      }
    }
  }

  report.status = StarStatus::violated;
  report.nonmodular_pairs = nonmodular_flat_pairs(rank, false);
  return report;
}

}  // namespace pm
