#include "polymatroid/cone.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "polymatroid/io.hpp"

namespace pm {

namespace {

constexpr int kMaxEnumerate = 5;  // enumeration scale; facets go up to 6

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("ray coordinate overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("ray coordinate overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("ray coordinate overflow");
  return r;
}

void normalize_primitive(std::span<std::int64_t> coords) {
  std::uint64_t g = 0;
  for (std::int64_t c : coords)
    g = std::gcd(g, static_cast<std::uint64_t>(c < 0 ? -static_cast<std::uint64_t>(c)
                                                     : static_cast<std::uint64_t>(c)));
  if (g > 1) {
    for (std::int64_t& c : coords) c /= static_cast<std::int64_t>(g);
  }
}

// Tight-facet indicator; 128 bits cover every supported facet system.
struct Mask {
  std::uint64_t lo = 0, hi = 0;

  void set(int b) {
    if (b < 64)
      lo |= 1ull << b;
    else
      hi |= 1ull << (b - 64);
  }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool contains(const Mask& sub) const {
    return (lo & sub.lo) == sub.lo && (hi & sub.hi) == sub.hi;
  }
  friend Mask operator&(const Mask& a, const Mask& b) {
    return Mask{a.lo & b.lo, a.hi & b.hi};
  }
};

std::int64_t eval_row(const FacetRow& row, std::span<const std::int64_t> coords) {
  std::int64_t s = 0;
  for (int t = 0; t < row.nterms; ++t)
    s = checked_add(s, checked_mul(row.coeff[static_cast<std::size_t>(t)],
                                   coords[static_cast<std::size_t>(
                                       row.pos[static_cast<std::size_t>(t)])]));
  return s;
}

std::vector<Rat> dense_row(const FacetRow& row, int dim) {
  std::vector<Rat> out(static_cast<std::size_t>(dim));
  for (int t = 0; t < row.nterms; ++t)
    out[static_cast<std::size_t>(row.pos[static_cast<std::size_t>(t)])] =
        row.coeff[static_cast<std::size_t>(t)];
  return out;
}

// Display-order lexicographic comparison of two mask-order coordinate vectors.
struct DisplayLess {
  const std::vector<SubsetId>& order;
  bool operator()(const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) const {
    for (SubsetId s : order) {
      const std::int64_t va = a[s.bits - 1];
      const std::int64_t vb = b[s.bits - 1];
      if (va != vb) return va < vb;
    }
    return false;
  }
};

}  // namespace

std::string FacetRow::tag(const GroundSet& ground) const {
  if (kind == Kind::monotone) return "mono(" + ground.label(i) + ")";
  return "sub(" + ground.label(i) + "," + ground.label(j) + "|" +
         ground.subset_name(base) + ")";
}

FacetSystem facet_inequalities(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("facet system defined for 1 <= n <= 6");
  FacetSystem fs;
  fs.n = n;
  fs.dim = (1 << n) - 1;
  const std::uint32_t full = (1u << n) - 1;

  for (int i = 0; i < n; ++i) {
    FacetRow row;
    row.kind = FacetRow::Kind::monotone;
    row.i = i;
    row.pos[0] = static_cast<std::int32_t>(full) - 1;
    row.coeff[0] = 1;
    row.nterms = 1;
    const std::uint32_t rest = full & ~(1u << i);
    if (rest != 0) {
      row.pos[1] = static_cast<std::int32_t>(rest) - 1;
      row.coeff[1] = -1;
      row.nterms = 2;
    }
    fs.rows.push_back(row);
  }
  for (std::uint32_t k = 0; k <= full; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((k >> i) & 1u) continue;
      for (int j = i + 1; j < n; ++j) {
        if ((k >> j) & 1u) continue;
        FacetRow row;
        row.kind = FacetRow::Kind::submodular;
        row.i = i;
        row.j = j;
        row.base = SubsetId{k};
        const std::uint32_t iK = k | (1u << i);
        const std::uint32_t jK = k | (1u << j);
        const std::uint32_t ijK = iK | jK;
        row.pos[0] = static_cast<std::int32_t>(iK) - 1;
        row.coeff[0] = 1;
        row.pos[1] = static_cast<std::int32_t>(jK) - 1;
        row.coeff[1] = 1;
        row.pos[2] = static_cast<std::int32_t>(ijK) - 1;
        row.coeff[2] = -1;
        row.nterms = 3;
        if (k != 0) {
          row.pos[3] = static_cast<std::int32_t>(k) - 1;
          row.coeff[3] = -1;
          row.nterms = 4;
        }
        fs.rows.push_back(row);
      }
    }
  }
  return fs;
}

RankFunction ray_rank_function(int n, const ExtremeRay& ray) {
  GroundSet ground(n);
  if (ray.coords.size() + 1 != ground.subset_count())
    throw std::invalid_argument("ray has wrong dimension");
  std::vector<Rat> values(ground.subset_count());
  for (std::size_t k = 0; k < ray.coords.size(); ++k)
    values[k + 1] = static_cast<long>(ray.coords[k]);
  return RankFunction(std::move(ground), std::move(values));
}

// ---------------------------------------------------------------------------
// Double description

namespace {

struct DDState {
  int dim = 0;
  std::size_t count = 0;
  std::vector<std::int64_t> coords;  // count x dim, flattened
  std::vector<Mask> tight;

  std::span<const std::int64_t> ray(std::size_t r) const {
    return {coords.data() + r * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
};

// First dim linearly independent rows, in system order.
std::vector<int> select_basis_rows(const FacetSystem& fs) {
  const int dim = fs.dim;
  std::vector<std::vector<Rat>> echelon;
  std::vector<int> pivots;
  std::vector<int> selected;
  for (int r = 0; r < static_cast<int>(fs.rows.size()) &&
                  static_cast<int>(selected.size()) < dim;
       ++r) {
    std::vector<Rat> v = dense_row(fs.rows[static_cast<std::size_t>(r)], dim);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rat factor = v[static_cast<std::size_t>(pivots[k])];
      if (factor == 0) continue;
      for (int c = 0; c < dim; ++c)
        v[static_cast<std::size_t>(c)] -= factor * echelon[k][static_cast<std::size_t>(c)];
    }
    int pivot = -1;
    for (int c = 0; c < dim; ++c) {
      if (v[static_cast<std::size_t>(c)] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    const Rat inv = 1 / v[static_cast<std::size_t>(pivot)];
    for (int c = 0; c < dim; ++c) v[static_cast<std::size_t>(c)] *= inv;
    echelon.push_back(std::move(v));
    pivots.push_back(pivot);
    selected.push_back(r);
  }
  if (static_cast<int>(selected.size()) != dim)
    throw std::logic_error("facet system is not full-dimensional");
  return selected;
}

// Columns of the inverse of the selected rows, as primitive integer vectors.
std::vector<std::vector<std::int64_t>> initial_rays(const FacetSystem& fs,
                                                    const std::vector<int>& selected) {
  const int dim = fs.dim;
  // Gauss-Jordan on [B | I].
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(dim),
                                  std::vector<Rat>(static_cast<std::size_t>(2 * dim)));
  for (int r = 0; r < dim; ++r) {
    auto dense = dense_row(fs.rows[static_cast<std::size_t>(selected[static_cast<std::size_t>(r)])], dim);
    for (int c = 0; c < dim; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = dense[static_cast<std::size_t>(c)];
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dim + r)] = 1;
  }
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("singular basis");
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
    auto& prow = m[static_cast<std::size_t>(col)];
    const Rat inv = 1 / prow[static_cast<std::size_t>(col)];
    for (int c = 0; c < 2 * dim; ++c) prow[static_cast<std::size_t>(c)] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == col) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      const Rat factor = row[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = 0; c < 2 * dim; ++c)
        row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
  }

  std::vector<std::vector<std::int64_t>> rays;
  for (int j = 0; j < dim; ++j) {
    // Column j of the inverse, scaled by the lcm of denominators.
    Int lcm = 1;
    for (int r = 0; r < dim; ++r) {
      const Rat& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dim + j)];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    std::vector<std::int64_t> ray(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
      Rat v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(dim + j)] * Rat(lcm);
      v.canonicalize();
      assert(v.get_den() == 1);
      if (!v.get_num().fits_slong_p())
        throw std::overflow_error("initial ray coordinate overflow");
      ray[static_cast<std::size_t>(r)] = v.get_num().get_si();
    }
    normalize_primitive(ray);
    rays.push_back(std::move(ray));
  }
  return rays;
}

#ifndef NDEBUG
void check_partial_cone(const FacetSystem& fs, const DDState& state,
                        const std::vector<int>& processed) {
  for (std::size_t r = 0; r < state.count; ++r) {
    Mask expect;
    for (int gid : processed) {
      const std::int64_t s = eval_row(fs.rows[static_cast<std::size_t>(gid)], state.ray(r));
      assert(s >= 0 && "ray violates a processed facet");
      if (s == 0) expect.set(gid);
    }
    assert(expect.lo == state.tight[r].lo && expect.hi == state.tight[r].hi);
  }
}
#endif

}  // namespace

std::vector<ExtremeRay> enumerate_extreme_rays(const FacetSystem& fs,
                                               const EnumOptions& options) {
  if (fs.n > kMaxEnumerate)
    throw std::invalid_argument(
        "extreme-ray enumeration supports n <= 5; import precomputed rays instead");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  const int dim = fs.dim;
  const std::vector<int> basis = select_basis_rows(fs);
  std::vector<char> in_basis(fs.rows.size(), 0);
  for (int gid : basis) in_basis[static_cast<std::size_t>(gid)] = 1;

  DDState state;
  state.dim = dim;
  std::vector<int> processed = basis;
  std::sort(processed.begin(), processed.end());
  for (auto& ray : initial_rays(fs, basis)) {
    Mask mask;
    for (int gid : processed) {
      if (eval_row(fs.rows[static_cast<std::size_t>(gid)], ray) == 0) mask.set(gid);
    }
    state.coords.insert(state.coords.end(), ray.begin(), ray.end());
    state.tight.push_back(mask);
    ++state.count;
  }

  const int jobs = std::max(1, options.jobs);

  for (int gid = 0; gid < static_cast<int>(fs.rows.size()); ++gid) {
    if (in_basis[static_cast<std::size_t>(gid)]) continue;
    const FacetRow& row = fs.rows[static_cast<std::size_t>(gid)];

    if (elapsed() > options.budget_seconds)
      throw BudgetError(
          "enumeration budget exceeded; raise --budget-seconds or supply "
          "precomputed rays via the import path");

    std::vector<std::int64_t> slack(state.count);
    std::vector<std::uint32_t> plus, zero, minus;
    for (std::size_t r = 0; r < state.count; ++r) {
      slack[r] = eval_row(row, state.ray(r));
      if (slack[r] > 0)
        plus.push_back(static_cast<std::uint32_t>(r));
      else if (slack[r] < 0)
        minus.push_back(static_cast<std::uint32_t>(r));
      else
        zero.push_back(static_cast<std::uint32_t>(r));
    }

    if (minus.empty()) {
      for (std::uint32_t r : zero) state.tight[r].set(gid);
      processed.push_back(gid);
#ifndef NDEBUG
      check_partial_cone(fs, state, processed);
#endif
      continue;
    }

    // Pairs (minus, plus) that can be adjacent need at least dim-2 common
    // tight facets; survivors face the combinatorial test against all rays.
    const int needed = dim - 2;
    std::vector<std::uint32_t> plus_cand;
    for (std::uint32_t p : plus) {
      if (state.tight[p].count() >= needed) plus_cand.push_back(p);
    }
    std::vector<std::uint32_t> minus_cand;
    for (std::uint32_t m : minus) {
      if (state.tight[m].count() >= needed) minus_cand.push_back(m);
    }

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(
        static_cast<std::size_t>(jobs));
    auto scan = [&](int t) {
      auto& local = found[static_cast<std::size_t>(t)];
      for (std::size_t mi = static_cast<std::size_t>(t); mi < minus_cand.size();
           mi += static_cast<std::size_t>(jobs)) {
        const std::uint32_t m = minus_cand[mi];
        const Mask tm = state.tight[m];
        for (const std::uint32_t p : plus_cand) {
          const Mask common = tm & state.tight[p];
          if (common.count() < needed) continue;
          bool adjacent = true;
          for (std::size_t w = 0; w < state.count; ++w) {
            if (w == m || w == p) continue;
            if (state.tight[w].contains(common)) {
              adjacent = false;
              break;
            }
          }
          if (adjacent) local.emplace_back(static_cast<std::uint32_t>(mi), p);
        }
      }
    };
    if (jobs == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(scan, t);
      for (auto& th : pool) th.join();
    }

    // Deterministic order: by (minus position, plus position).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (auto& local : found)
      pairs.insert(pairs.end(), local.begin(), local.end());
    std::sort(pairs.begin(), pairs.end());

    DDState next;
    next.dim = dim;
    next.coords.reserve((plus.size() + zero.size() + pairs.size()) *
                        static_cast<std::size_t>(dim));
    auto keep = [&](std::uint32_t r, bool tight_now) {
      auto span = state.ray(r);
      next.coords.insert(next.coords.end(), span.begin(), span.end());
      Mask mask = state.tight[r];
      if (tight_now) mask.set(gid);
      next.tight.push_back(mask);
      ++next.count;
    };
    for (std::uint32_t r : plus) keep(r, false);
    for (std::uint32_t r : zero) keep(r, true);

    processed.push_back(gid);
    for (const auto& [mi, p] : pairs) {
      const std::uint32_t m = minus_cand[mi];
      std::vector<std::int64_t> fresh(static_cast<std::size_t>(dim));
      const auto u = state.ray(p);   // slack > 0
      const auto v = state.ray(m);   // slack < 0
      for (int c = 0; c < dim; ++c) {
        fresh[static_cast<std::size_t>(c)] =
            checked_sub(checked_mul(slack[p], v[static_cast<std::size_t>(c)]),
                        checked_mul(slack[m], u[static_cast<std::size_t>(c)]));
      }
      normalize_primitive(fresh);
      Mask mask;
      for (int pg : processed) {
        if (eval_row(fs.rows[static_cast<std::size_t>(pg)], fresh) == 0) mask.set(pg);
      }
      next.coords.insert(next.coords.end(), fresh.begin(), fresh.end());
      next.tight.push_back(mask);
      ++next.count;
    }

    state = std::move(next);
    if (state.count > options.max_rays)
      throw BudgetError(
          "intermediate ray count exceeds the configured cap; raise the cap or "
          "supply precomputed rays via the import path");
#ifndef NDEBUG
    check_partial_cone(fs, state, processed);
#endif
  }

  // Deterministic output order.
  std::vector<std::vector<std::int64_t>> vectors;
  vectors.reserve(state.count);
  for (std::size_t r = 0; r < state.count; ++r) {
    auto span = state.ray(r);
    vectors.emplace_back(span.begin(), span.end());
  }
  const auto order = display_order(fs.n);
  std::sort(vectors.begin(), vectors.end(), DisplayLess{order});
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());

  std::vector<ExtremeRay> rays;
  rays.reserve(vectors.size());
  for (auto& v : vectors) rays.push_back(ExtremeRay{std::move(v)});
  return rays;
}

// ---------------------------------------------------------------------------
// Extremality, import/export

namespace {

constexpr std::int64_t kRankPrime = 2147483647;  // 2^31 - 1

// Rank over GF(kRankPrime); never exceeds the rational rank.
int modp_rank(std::vector<std::vector<std::int64_t>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  const std::int64_t p = kRankPrime;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    // Modular inverse via Fermat.
    std::int64_t base = ((prow[static_cast<std::size_t>(col)] % p) + p) % p;
    std::int64_t inv = 1, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) inv = static_cast<std::int64_t>(__int128(inv) * base % p);
      base = static_cast<std::int64_t>(__int128(base) * base % p);
      exp >>= 1;
    }
    for (int c = col; c < cols; ++c)
      prow[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(
          __int128(((prow[static_cast<std::size_t>(c)] % p) + p) % p) * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto& rowv = m[static_cast<std::size_t>(r)];
      const std::int64_t factor = ((rowv[static_cast<std::size_t>(col)] % p) + p) % p;
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c) {
        const std::int64_t sub = static_cast<std::int64_t>(
            __int128(factor) * prow[static_cast<std::size_t>(c)] % p);
        rowv[static_cast<std::size_t>(c)] =
            ((rowv[static_cast<std::size_t>(c)] - sub) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Exact rank via rational elimination; only the rare fallback path.
int exact_rank(const std::vector<std::vector<std::int64_t>>& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                  std::vector<Rat>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          static_cast<long>(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& rowv = a[static_cast<std::size_t>(r)];
      if (rowv[static_cast<std::size_t>(col)] == 0) continue;
      const Rat factor = rowv[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      for (int c = col; c < cols; ++c)
        rowv[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_extreme(const FacetSystem& fs, const ExtremeRay& ray) {
  if (static_cast<int>(ray.coords.size()) != fs.dim) return false;
  bool nonzero = false;
  for (std::int64_t c : ray.coords) nonzero |= c != 0;
  if (!nonzero) return false;

  std::vector<std::vector<std::int64_t>> tight_rows;
  for (const FacetRow& row : fs.rows) {
    const std::int64_t s = eval_row(row, ray.coords);
    if (s < 0) return false;
    if (s == 0) {
      std::vector<std::int64_t> dense(static_cast<std::size_t>(fs.dim), 0);
      for (int t = 0; t < row.nterms; ++t)
        dense[static_cast<std::size_t>(row.pos[static_cast<std::size_t>(t)])] =
            row.coeff[static_cast<std::size_t>(t)];
      tight_rows.push_back(std::move(dense));
    }
  }
  if (static_cast<int>(tight_rows.size()) < fs.dim - 1) return false;
  // The ray lies in the kernel, so the rank is at most dim-1; a mod-p rank of
  // dim-1 therefore certifies equality and the exact path is rarely needed.
  if (modp_rank(tight_rows) == fs.dim - 1) return true;
  return exact_rank(tight_rows) == fs.dim - 1;
}

void export_rays(std::ostream& out, int n, std::span<const ExtremeRay> rays) {
  out << "polymatroid-rays v1 n=" << n << " count=" << rays.size() << "\n";
  const auto order = display_order(n);
  for (const ExtremeRay& ray : rays) {
    bool first = true;
    for (SubsetId s : order) {
      if (!first) out << ",";
      out << ray.coords[s.bits - 1];
      first = false;
    }
    out << "\n";
  }
}

std::vector<ExtremeRay> import_rays(std::istream& in, int n) {
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty ray file");
  int file_n = -1;
  long long file_count = -1;
  {
    std::istringstream hs(header);
    std::string magic, version, nfield, cfield;
    hs >> magic >> version >> nfield >> cfield;
    if (magic != "polymatroid-rays" || version != "v1" ||
        nfield.rfind("n=", 0) != 0 || cfield.rfind("count=", 0) != 0)
      throw FormatError("bad ray file header: " + header);
    try {
      file_n = std::stoi(nfield.substr(2));
      file_count = std::stoll(cfield.substr(6));
    } catch (const std::exception&) {
      throw FormatError("bad ray file header: " + header);
    }
  }
  if (file_n != n)
    throw FormatError("ray file is for n=" + std::to_string(file_n) +
                      ", expected n=" + std::to_string(n));

  const auto order = display_order(n);
  const std::size_t dim = order.size();
  std::vector<std::vector<std::int64_t>> vectors;
  std::string line;
  while (std::getline(in, line)) {
    // Strip comments and whitespace-only lines.
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line) blank &= std::isspace(static_cast<unsigned char>(c)) != 0;
    if (blank) continue;

    std::vector<std::int64_t> entries;
    std::size_t at = 0;
    while (at <= line.size()) {
      std::size_t comma = line.find(',', at);
      if (comma == std::string::npos) comma = line.size();
      std::string field = line.substr(at, comma - at);
      try {
        std::size_t used = 0;
        const long long v = std::stoll(field, &used);
        while (used < field.size() &&
               std::isspace(static_cast<unsigned char>(field[used])))
          ++used;
        if (used != field.size()) throw std::invalid_argument(field);
        entries.push_back(v);
      } catch (const std::exception&) {
        throw FormatError("malformed ray entry '" + field + "'");
      }
      at = comma + 1;
      if (comma == line.size()) break;
    }
    if (entries.size() != dim)
      throw FormatError("ray line has " + std::to_string(entries.size()) +
                        " entries, expected " + std::to_string(dim));
    std::vector<std::int64_t> by_mask(dim);
    for (std::size_t k = 0; k < dim; ++k) by_mask[order[k].bits - 1] = entries[k];
    normalize_primitive(by_mask);
    vectors.push_back(std::move(by_mask));
  }
  if (file_count >= 0 && static_cast<long long>(vectors.size()) != file_count)
    throw FormatError("ray file announces count=" + std::to_string(file_count) +
                      " but has " + std::to_string(vectors.size()) + " vectors");

  std::sort(vectors.begin(), vectors.end(), DisplayLess{order});
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());

  const FacetSystem fs = facet_inequalities(n);
  std::vector<ExtremeRay> rays;
  rays.reserve(vectors.size());
  for (auto& v : vectors) {
    ExtremeRay ray{std::move(v)};
    for (const FacetRow& row : fs.rows) {
      if (eval_row(row, ray.coords) < 0)
        throw ValidationError("imported vector violates " + row.tag(GroundSet(n)));
    }
    if (!is_extreme(fs, ray))
      throw ValidationError("imported vector is not an extreme ray");
    rays.push_back(std::move(ray));
  }
  return rays;
}

std::vector<ExtremeRay> import_rays_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open ray file: " + path);
  return import_rays(in, n);
}

// ---------------------------------------------------------------------------
// Isomorphism classification

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Canonical display-order vector: lexicographic minimum over all relabelings.
std::vector<std::int64_t> canonical_display_vector(
    std::span<const std::int64_t> coords, const std::vector<SubsetId>& order,
    const std::vector<std::vector<std::uint32_t>>& tables) {
  const std::vector<std::uint32_t>* best = nullptr;
  for (const auto& table : tables) {
    if (!best) {
      best = &table;
      continue;
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::int64_t cand = coords[table[order[k].bits] - 1];
      const std::int64_t cur = coords[(*best)[order[k].bits] - 1];
      if (cand < cur) {
        best = &table;
        break;
      }
      if (cand > cur) break;
    }
  }
  std::vector<std::int64_t> out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    out[k] = coords[(*best)[order[k].bits] - 1];
  return out;
}

}  // namespace

std::vector<IsoClass> classify_isomorphism(int n, std::span<const ExtremeRay> rays) {
  const auto order = display_order(n);
  const auto tables = all_mask_permutations(n);

  std::unordered_map<std::vector<std::int64_t>, int, VectorHash> members;
  for (const ExtremeRay& ray : rays) {
    if (ray.coords.size() != order.size())
      throw std::invalid_argument("ray dimension mismatch");
    ++members[canonical_display_vector(ray.coords, order, tables)];
  }

  std::vector<std::pair<std::vector<std::int64_t>, int>> sorted(members.begin(),
                                                                members.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<IsoClass> classes;
  classes.reserve(sorted.size());
  for (auto& [display_vec, count] : sorted) {
    std::vector<std::int64_t> by_mask(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      by_mask[order[k].bits - 1] = display_vec[k];

    // Orbit size: distinct relabelings of the representative.
    std::set<std::vector<std::int64_t>> images;
    for (const auto& table : tables) {
      std::vector<std::int64_t> img(order.size());
      for (std::size_t k = 0; k < order.size(); ++k)
        img[k] = by_mask[table[order[k].bits] - 1];
      images.insert(std::move(img));
    }

    IsoClass cls;
    cls.representative = ExtremeRay{std::move(by_mask)};
    cls.orbit_size = static_cast<int>(images.size());
    cls.member_count = count;
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Elimination rules and survivor verification

FilterOutcome lemma_filter(int n, std::span<const IsoClass> classes) {
  FilterOutcome outcome;
  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    const RankFunction rank = ray_rank_function(n, classes[idx].representative);

    // Rule (a): an intersecting non-modular flat pair.
    const auto intersecting = nonmodular_flat_pairs(rank, true);
    if (!intersecting.empty()) {
      const FlatPairDefect& w = intersecting.front();
      outcome.eliminated.push_back({idx, ElimRule::intersecting_nonmodular, w.f1, w.f2,
                                    w.defect, std::nullopt});
      continue;
    }

    // Rule (b): disjoint flats generating a non-principal cut. Report the
    // smallest such cut (ties broken by pair order).
    const FlatSet fs = flats(rank);
    std::optional<Elimination> witness;
    for (std::size_t i = 0; i < fs.flats.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.flats.size(); ++j) {
        const SubsetId f1 = fs.flats[i];
        const SubsetId f2 = fs.flats[j];
        if (!is_empty(set_intersect(f1, f2))) continue;
        const SubsetId seeds[] = {f1, f2};
        ModularCut cut = generate_modular_cut(rank, seeds);
        if (is_principal_cut(cut)) continue;
        if (!witness || cut.members.size() < witness->cut->members.size()) {
          witness = Elimination{idx, ElimRule::disjoint_nonprincipal, f1, f2,
                                modular_defect(rank, f1, f2), std::move(cut)};
        }
      }
    }
    if (witness) {
      outcome.eliminated.push_back(std::move(*witness));
      continue;
    }
    outcome.survivors.push_back(idx);
  }
  return outcome;
}

SurvivorReport verify_survivors(int n, std::span<const IsoClass> classes,
                                const FilterOutcome& outcome) {
  SurvivorReport report;
  report.star_status.reserve(classes.size());
  for (const IsoClass& cls : classes) {
    const RankFunction rank = ray_rank_function(n, cls.representative);
    const StarStatus status = check_star(rank).status;
    report.star_status.push_back(status);
    if (status == StarStatus::violated) report.any_star_violated = true;
  }
  for (std::size_t idx : outcome.survivors) {
    const RankFunction rank = ray_rank_function(n, classes[idx].representative);
    const LinearityReport lin = is_linear(rank);
    report.survivors.push_back({idx, lin.linear, lin.failing_pair});
    if (!lin.linear) report.all_survivors_linear = false;
  }
  return report;
}

}  // namespace pm
