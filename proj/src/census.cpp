#include "polymatroid/census.hpp"

namespace pm::census {

long expected_ray_count(int n) {
  switch (n) {
    case 1: return 1;
    case 2: return 3;
    case 3: return 8;
    case 4: return 41;
    case 5: return 117983;
    default: return -1;
  }
}

long expected_class_count(int n) {
  switch (n) {
    case 3: return 4;
    case 4: return 11;
    case 5: return 1320;
    default: return -1;
  }
}

const std::vector<std::vector<std::int64_t>>& two_element_rays() {
  // Ranks of a, b, ab.
  static const std::vector<std::vector<std::int64_t>> rows = {
      {1, 0, 1},
      {0, 1, 1},
      {1, 1, 1},
  };
  return rows;
}

const std::vector<std::vector<std::int64_t>>& three_element_representatives() {
  // Ranks of a, b, c, ab, ac, bc, abc.
  static const std::vector<std::vector<std::int64_t>> rows = {
      {1, 0, 0, 1, 1, 0, 1},
      {1, 1, 0, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 2, 2, 2, 2},
  };
  return rows;
}

const std::vector<std::vector<std::int64_t>>& four_element_representatives() {
  // Ranks by cardinality, alphabetical within each block.
  static const std::vector<std::vector<std::int64_t>> rows = {
      {0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1},
      {0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
      {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
      {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3},
      {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
      {1, 1, 1, 2, 2, 2, 3, 2, 3, 3, 3, 3, 3, 3, 3},
      {2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4},
  };
  return rows;
}

const std::vector<std::vector<std::int64_t>>& five_element_survivors() {
  static const std::vector<std::vector<std::int64_t>> rows = {
      {0,0,0,0,1,0,0,0,1,0,0,1,0,1,1,0,0,1,0,1,1,0,1,1,1,0,1,1,1,1,1},
      {0,0,0,1,1,0,0,1,1,0,1,1,1,1,1,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
      {0,0,1,1,1,0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
      {0,0,1,1,1,0,1,1,1,1,1,1,2,2,2,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
      {0,1,1,1,1,1,1,1,1,1,2,2,2,2,2,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {0,1,1,1,1,1,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {0,1,1,1,2,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1},
      {1,1,1,1,1,1,1,2,2,1,2,2,2,2,2,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,1,1,2,2,2,2,2,2,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,2,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2},
      {1,1,1,2,2,2,2,2,2,2,3,3,3,3,3,2,3,3,3,3,3,3,3,3,3,3,3,3,3,3,3},
  };
  return rows;
}

}  // namespace pm::census
