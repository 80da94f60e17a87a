#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hcube {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact rational from "p", "p/q", or a decimal literal such as
/// "-1.25" or "3.5e-2". Decimals are converted exactly, never through double.
/// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string format_rational(const Rational& value);

/// Fixed-point rendering with `digits` fractional digits, rounding half away
/// from zero.
std::string format_decimal(const Rational& value, int digits);

/// Exact form when `digits` is empty, fixed-point otherwise.
std::string format_value(const Rational& value, std::optional<int> digits);

}  // namespace hcube
