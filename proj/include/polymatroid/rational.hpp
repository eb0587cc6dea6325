#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pm {

// Exact arithmetic only. No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

// Parse errors from any of the text formats (exit code 1 territory).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically invalid input object (exit code 2 territory).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource budget exceeded; message carries the recommended way out.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "3", "-3", "3/2"; denominator must be nonzero.
Rat parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& value);

}  // namespace pm
