#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lexiprof {

/// Exact rational used for weights, congruences and every aggregate score.
using Rational = mpq_class;

/// Canonical num/den. Throws std::invalid_argument when `den` is zero.
Rational make_ratio(long num, unsigned long den);

/// Parses `"3"`, `"-0.25"`, `"7/12"`. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Parses a plain decimal literal (`"0.583333333"`, `"2"`). Throws
/// std::invalid_argument on anything else, including fractions.
Rational parse_decimal(std::string_view text);

/// Renders `value` with exactly `digits` fractional digits, rounding half to
/// even. `render_fixed(7/12, 9) == "0.583333333"`.
std::string render_fixed(const Rational& value, int digits);

/// Rounds `value` to `digits` fractional digits (half-even) and returns the
/// exact rational of the rendered decimal.
Rational round_fixed(const Rational& value, int digits);

/// Nearest decimal with `digits` fractional digits to a finite double.
Rational from_double_fixed(double value, int digits);

}  // namespace lexiprof
