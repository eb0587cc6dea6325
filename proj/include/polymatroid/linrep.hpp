#pragma once

#include <vector>

#include "polymatroid/extend.hpp"
#include "polymatroid/setfun.hpp"

namespace pm {

// Subspace arrangement over a prime field GF(p): each ground-set element
// carries a list of generator vectors of its subspace. Extension fields are
// out of scope; every representation handled here fits in GF(p).
struct LinearRepresentation {
  int p = 2;  // prime
  int d = 0;  // ambient dimension
  GroundSet ground{1};
  // generators[element][vector][coordinate], entries in [0, p).
  std::vector<std::vector<std::vector<int>>> generators;
};

// Validates shape, field size and entry ranges; throws std::invalid_argument.
LinearRepresentation make_linear_representation(
    int p, int d, GroundSet ground,
    std::vector<std::vector<std::vector<int>>> generators);

// f(A) = rank over GF(p) of the stacked generators of the elements of A.
// Always a polymatroid with integer values.
RankFunction rank_from_representation(const LinearRepresentation& rep);

// Adjoins a new element represented by span(V_X) & span(V_Y) and returns the
// excess function of that one-point extension. Guarantees e(X) = e(Y) = 0 and
// e(X&Y) = modular_defect(X,Y).
ExcessFunction intersection_extension(const LinearRepresentation& rep,
                                      SubsetId x, SubsetId y);

// Exact rank of a matrix over GF(p); rows of length d. Exposed for tests.
int gf_rank(int p, std::vector<std::vector<int>> rows);

}  // namespace pm
