#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace troposign {

using Rational = mpq_class;

// Every domain failure in the library is reported with this type so the CLI
// can map it to the input-error exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "7", "-3/4", "2.25", "-0.5", "1e3". The result is canonical.
Rational parse_rational(std::string_view text);

// Integers print as "7", other values as "p/q".
std::string to_string(const Rational& q);

// Natural logarithm of |q| for q != 0, accurate for very large numerators.
double log_abs(const Rational& q);

Rational rational_from_int(long value);

}  // namespace troposign
