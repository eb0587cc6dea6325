#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polymatroid/linrep.hpp"
#include "polymatroid/setfun.hpp"

namespace pm {

// Text format for one polymatroid: the ranks of the nonempty subsets in
// display order, separated by commas. Blank lines and '#' comments allowed
// in files. Throws FormatError on malformed input.

// Number of elements for a vector of `count` ranks; FormatError when count
// is not 2^n - 1 for some 1 <= n <= kMaxGroundSize.
int ground_size_for_entry_count(std::size_t count);

RankFunction parse_polymatroid_line(const std::string& line);
RankFunction parse_polymatroid_line(const std::string& line, const GroundSet& ground);
std::string format_polymatroid(const RankFunction& rank);

// All polymatroid lines of a stream (one per line).
std::vector<RankFunction> read_polymatroid_file(std::istream& in);

// Representation file: header "linrep v1 p=<p> d=<d>", then per element one
// line "label: v1; v2; ..." with each vector given as space-separated
// residues mod p. An empty generator list (just "label:") is a loop.
LinearRepresentation read_linrep(std::istream& in);
void write_linrep(std::ostream& out, const LinearRepresentation& rep);

}  // namespace pm
