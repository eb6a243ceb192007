#ifndef RATSTOCH_RATIONAL_HPP
#define RATSTOCH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ratstoch {

// Arbitrary-precision fraction. GMP keeps every arithmetic result canonical
// (gcd(num, den) = 1, den > 0); values built from raw parts go through
// make_rational so the invariant holds everywhere.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p" or "p/q" with decimal p (optional leading '-'), q > 0.
// Throws std::invalid_argument on anything else, including "1/0".
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace ratstoch

#endif  // RATSTOCH_RATIONAL_HPP
