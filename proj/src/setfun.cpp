#include "polymatroid/setfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace pm {

RankFunction::RankFunction(GroundSet ground, std::vector<Rat> by_mask)
    : ground_(std::move(ground)), values_(std::move(by_mask)) {
  if (values_.size() != ground_.subset_count())
    throw std::invalid_argument("rank vector has wrong dimension");
  if (values_[0] != 0)
    throw std::invalid_argument("rank of the empty set must be 0");
}

RankFunction RankFunction::from_nonempty(GroundSet ground, std::span<const Rat> values) {
  if (values.size() + 1 != ground.subset_count())
    throw std::invalid_argument("rank vector has wrong dimension");
  std::vector<Rat> by_mask(ground.subset_count());
  for (std::size_t k = 0; k < values.size(); ++k) by_mask[k + 1] = values[k];
  return RankFunction(std::move(ground), std::move(by_mask));
}

RankFunction RankFunction::zero(GroundSet ground) {
  std::vector<Rat> by_mask(ground.subset_count());
  return RankFunction(std::move(ground), std::move(by_mask));
}

std::vector<Rat> RankFunction::display_values() const {
  std::vector<Rat> out;
  out.reserve(subset_count() - 1);
  for (SubsetId s : display_order(n())) out.push_back(at(s));
  return out;
}

namespace {

void add_violation(ValidationReport& report, std::string rule, SubsetId a, SubsetId b,
                   Rat slack) {
  report.valid = false;
  report.violations.push_back({std::move(rule), a, b, std::move(slack)});
}

}  // namespace

ValidationReport validate_polymatroid(const RankFunction& rank, ValidationMode mode) {
  ValidationReport report;
  const std::uint32_t size = rank.subset_count();
  const int n = rank.n();
  const SubsetId full = rank.ground().full();

  if (mode == ValidationMode::facet) {
    // f(M) >= f(M-i)
    for (int i = 0; i < n; ++i) {
      const SubsetId rest = set_difference(full, singleton(i));
      Rat slack = rank.at(full) - rank.at(rest);
      if (slack < 0) add_violation(report, "monotonicity", rest, full, std::move(slack));
    }
    // delta(iK, jK) >= 0 for distinct i,j outside K
    for (std::uint32_t k = 0; k < size; ++k) {
      const SubsetId K{k};
      for (int i = 0; i < n; ++i) {
        if (has_element(K, i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (has_element(K, j)) continue;
          const SubsetId iK = set_union(K, singleton(i));
          const SubsetId jK = set_union(K, singleton(j));
          Rat slack = rank.at(iK) + rank.at(jK) - rank.at(set_union(iK, jK)) - rank.at(K);
          if (slack < 0)
            add_violation(report, "submodularity", iK, jK, std::move(slack));
        }
      }
    }
    return report;
  }

  for (std::uint32_t m = 0; m < size; ++m) {
    if (rank.at(SubsetId{m}) < 0)
      add_violation(report, "nonnegativity", SubsetId{m}, SubsetId{m},
                    Rat(rank.at(SubsetId{m})));
  }
  // Every containment pair.
  for (std::uint32_t b = 0; b < size; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {  // subsets a of b
      if (a != b) {
        Rat slack = rank.at(SubsetId{b}) - rank.at(SubsetId{a});
        if (slack < 0)
          add_violation(report, "monotonicity", SubsetId{a}, SubsetId{b},
                        std::move(slack));
      }
      if (a == 0) break;
    }
  }
  // Every pair of subsets.
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      Rat slack = modular_defect(rank, SubsetId{a}, SubsetId{b});
      if (slack < 0)
        add_violation(report, "submodularity", SubsetId{a}, SubsetId{b},
                      std::move(slack));
    }
  }
  return report;
}

bool is_polymatroid(const RankFunction& rank) {
  return validate_polymatroid(rank, ValidationMode::facet).valid;
}

Rat modular_defect(const RankFunction& rank, SubsetId a, SubsetId b) {
  return rank.at(a) + rank.at(b) - rank.at(set_union(a, b)) - rank.at(set_intersect(a, b));
}

RankFunction contract(const RankFunction& rank, SubsetId s) {
  const GroundSet& ground = rank.ground();
  if (!ground.valid_subset(s)) throw std::invalid_argument("subset outside ground set");
  if (s == ground.full())
    throw std::invalid_argument("contracting the whole ground set leaves no elements");
  if (is_empty(s)) return rank;

  std::vector<int> kept;
  std::vector<std::string> labels;
  for (int i = 0; i < ground.size(); ++i) {
    if (!has_element(s, i)) {
      kept.push_back(i);
      labels.push_back(ground.label(i));
    }
  }
  GroundSet small(static_cast<int>(kept.size()), std::move(labels));
  std::vector<Rat> values(small.subset_count());
  const Rat& base = rank.at(s);
  for (std::uint32_t m = 0; m < small.subset_count(); ++m) {
    std::uint32_t big = s.bits;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      if ((m >> t) & 1u) big |= 1u << kept[t];
    }
    values[m] = rank.at(SubsetId{big}) - base;
  }
  return RankFunction(std::move(small), std::move(values));
}

RankFunction restrict(const RankFunction& rank, SubsetId s) {
  const GroundSet& ground = rank.ground();
  if (!ground.valid_subset(s)) throw std::invalid_argument("subset outside ground set");
  if (is_empty(s)) throw std::invalid_argument("restriction to the empty set");

  std::vector<int> kept;
  std::vector<std::string> labels;
  for (int i = 0; i < ground.size(); ++i) {
    if (has_element(s, i)) {
      kept.push_back(i);
      labels.push_back(ground.label(i));
    }
  }
  GroundSet small(static_cast<int>(kept.size()), std::move(labels));
  std::vector<Rat> values(small.subset_count());
  for (std::uint32_t m = 0; m < small.subset_count(); ++m) {
    std::uint32_t big = 0;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      if ((m >> t) & 1u) big |= 1u << kept[t];
    }
    values[m] = rank.at(SubsetId{big});
  }
  return RankFunction(std::move(small), std::move(values));
}

RankFunction conic_combination(std::span<const std::pair<Rat, RankFunction>> terms) {
  if (terms.empty()) throw std::invalid_argument("conic combination of no terms");
  const GroundSet& ground = terms.front().second.ground();
  std::vector<Rat> values(ground.subset_count());
  for (const auto& [coeff, term] : terms) {
    if (coeff < 0) throw std::invalid_argument("negative coefficient");
    if (!(term.ground() == ground))
      throw std::invalid_argument("mixed ground sets in conic combination");
    for (std::uint32_t m = 1; m < ground.subset_count(); ++m)
      values[m] += coeff * term.at(SubsetId{m});
  }
  return RankFunction(ground, std::move(values));
}

RankFunction permute(const RankFunction& rank, std::span<const int> p) {
  const GroundSet& ground = rank.ground();
  if (static_cast<int>(p.size()) != ground.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Rat> values(ground.subset_count());
  for (std::uint32_t m = 0; m < ground.subset_count(); ++m)
    values[permute_mask(m, p)] = rank.at(SubsetId{m});
  return RankFunction(ground, std::move(values));
}

RankFunction canonical_form(const RankFunction& rank) {
  const int n = rank.n();
  const auto order = display_order(n);
  const auto tables = all_mask_permutations(n);

  // Candidate for table T at display slot k is f(T[order[k]]); the identity
  // table appears among the T, so `best` starts empty and is always set.
  const std::vector<std::uint32_t>* best = nullptr;
  for (const auto& table : tables) {
    if (!best) {
      best = &table;
      continue;
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Rat& cand = rank.at(SubsetId{table[order[k].bits]});
      const Rat& cur = rank.at(SubsetId{(*best)[order[k].bits]});
      const int c = cmp(cand, cur);
      if (c < 0) {
        best = &table;
        break;
      }
      if (c > 0) break;
    }
  }

  std::vector<Rat> values(rank.subset_count());
  for (SubsetId s : order) values[s.bits] = rank.at(SubsetId{(*best)[s.bits]});
  return RankFunction(rank.ground(), std::move(values));
}

}  // namespace pm
