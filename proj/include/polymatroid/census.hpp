#pragma once

#include <cstdint>
#include <vector>

namespace pm::census {

// Published census of the extremal rays of the polymatroid cone on up to
// five elements, used as the reference the verification pipeline must
// reproduce. All vectors are in display order.

// Total number of extreme rays (1 <= n <= 5); -1 when unknown.
long expected_ray_count(int n);

// Number of isomorphism classes (3 <= n <= 5); -1 when unknown.
long expected_class_count(int n);

// The three extremal rank vectors on two elements.
const std::vector<std::vector<std::int64_t>>& two_element_rays();

// One representative per isomorphism class on three elements (4 rows).
const std::vector<std::vector<std::int64_t>>& three_element_representatives();

// One representative per isomorphism class on four elements (11 rows).
const std::vector<std::vector<std::int64_t>>& four_element_representatives();

// The 17 five-element classes that survive the elimination rules.
const std::vector<std::vector<std::int64_t>>& five_element_survivors();

}  // namespace pm::census
