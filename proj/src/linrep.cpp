#include "polymatroid/linrep.hpp"

#include <stdexcept>
#include <utility>

namespace pm {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int gf_inv(int p, int a) {
  // Fermat: a^(p-2) mod p.
  long long result = 1, base = a % p, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

// Reduces `rows` in place to row echelon form, returns the rank. Rows keep
// length d; zero rows sink to the bottom.
int gf_echelon(int p, std::vector<std::vector<int>>& rows, int d) {
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const int inv = gf_inv(p, prow[static_cast<std::size_t>(col)]);
    for (int c = col; c < d; ++c)
      prow[static_cast<std::size_t>(c)] =
          static_cast<int>(1LL * prow[static_cast<std::size_t>(c)] * inv % p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      const int factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c < d; ++c) {
        row[static_cast<std::size_t>(c)] = static_cast<int>(
            ((row[static_cast<std::size_t>(c)] -
              1LL * factor * prow[static_cast<std::size_t>(c)]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> stacked_generators(const LinearRepresentation& rep,
                                                 SubsetId a) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < rep.ground.size(); ++i) {
    if (!has_element(a, i)) continue;
    for (const auto& v : rep.generators[static_cast<std::size_t>(i)]) rows.push_back(v);
  }
  return rows;
}

// Basis of span(U) & span(W): solve x*U = y*W via the kernel of the stacked
// column system, then reduce the resulting vectors.
std::vector<std::vector<int>> subspace_intersection(
    int p, int d, const std::vector<std::vector<int>>& u,
    const std::vector<std::vector<int>>& w) {
  const int cu = static_cast<int>(u.size());
  const int cw = static_cast<int>(w.size());
  if (cu == 0 || cw == 0) return {};

  // d rows, cu + cw columns: [U^T | -W^T] z = 0.
  const int cols = cu + cw;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(d),
                                  std::vector<int>(static_cast<std::size_t>(cols), 0));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < cu; ++k)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
          u[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
    for (int k = 0; k < cw; ++k)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cu + k)] =
          (p - w[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]) % p;
  }

  // Gauss-Jordan to identify pivot and free columns.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < d; ++col) {
    int pivot = -1;
    for (int r = rank; r < d; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    const int inv = gf_inv(p, prow[static_cast<std::size_t>(col)]);
    for (int c = 0; c < cols; ++c)
      prow[static_cast<std::size_t>(c)] =
          static_cast<int>(1LL * prow[static_cast<std::size_t>(c)] * inv % p);
    for (int r = 0; r < d; ++r) {
      if (r == rank) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      const int factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = 0; c < cols; ++c)
        row[static_cast<std::size_t>(c)] = static_cast<int>(
            ((row[static_cast<std::size_t>(c)] -
              1LL * factor * prow[static_cast<std::size_t>(c)]) % p + p) % p);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  // One kernel vector per free column; its U-part yields an intersection vector.
  std::vector<std::vector<int>> result;
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<int> z(static_cast<std::size_t>(cols), 0);
    z[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < rank; ++r) {
      const int pc = pivot_col[static_cast<std::size_t>(r)];
      z[static_cast<std::size_t>(pc)] =
          (p - m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)]) % p;
    }
    std::vector<int> vec(static_cast<std::size_t>(d), 0);
    for (int k = 0; k < cu; ++k) {
      const int xk = z[static_cast<std::size_t>(k)];
      if (xk == 0) continue;
      for (int c = 0; c < d; ++c)
        vec[static_cast<std::size_t>(c)] = static_cast<int>(
            (vec[static_cast<std::size_t>(c)] +
             1LL * xk * u[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]) % p);
    }
    bool nonzero = false;
    for (int c = 0; c < d; ++c) nonzero |= vec[static_cast<std::size_t>(c)] != 0;
    if (nonzero) result.push_back(std::move(vec));
  }
  const int isect_rank = gf_echelon(p, result, d);
  result.resize(static_cast<std::size_t>(isect_rank));
  return result;
}

}  // namespace

int gf_rank(int p, std::vector<std::vector<int>> rows) {
  int d = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  return gf_echelon(p, rows, d);
}

LinearRepresentation make_linear_representation(
    int p, int d, GroundSet ground,
    std::vector<std::vector<std::vector<int>>> generators) {
  if (!is_prime(p)) throw std::invalid_argument("field size must be prime");
  if (d < 0) throw std::invalid_argument("negative ambient dimension");
  if (generators.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("one generator list per element required");
  for (const auto& list : generators) {
    for (const auto& v : list) {
      if (static_cast<int>(v.size()) != d)
        throw std::invalid_argument("generator vector has wrong dimension");
      for (int entry : v) {
        if (entry < 0 || entry >= p)
          throw std::invalid_argument("generator entry outside [0, p)");
      }
    }
  }
  return {p, d, std::move(ground), std::move(generators)};
}

RankFunction rank_from_representation(const LinearRepresentation& rep) {
  std::vector<Rat> values(rep.ground.subset_count());
  for (std::uint32_t m = 1; m < rep.ground.subset_count(); ++m) {
    values[m] = gf_rank(rep.p, stacked_generators(rep, SubsetId{m}));
  }
  return RankFunction(rep.ground, std::move(values));
}

ExcessFunction intersection_extension(const LinearRepresentation& rep, SubsetId x,
                                      SubsetId y) {
  const auto ix = stacked_generators(rep, x);
  const auto iy = stacked_generators(rep, y);
  const auto meet_basis = subspace_intersection(rep.p, rep.d, ix, iy);

  std::vector<Rat> values(rep.ground.subset_count());
  for (std::uint32_t m = 0; m < rep.ground.subset_count(); ++m) {
    auto rows = stacked_generators(rep, SubsetId{m});
    const int base = gf_rank(rep.p, rows);
    for (const auto& v : meet_basis) rows.push_back(v);
    const int extended = gf_rank(rep.p, std::move(rows));
    values[m] = extended - base;
  }
  return ExcessFunction(rep.ground.size(), std::move(values));
}

}  // namespace pm
