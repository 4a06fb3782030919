#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace evid {

/// Exact arbitrary-precision rational. Every probability and weight in the
/// library is one of these; floating point appears only in display code.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q" or a bare integer (optional leading '-'). Throws ParseError
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Renders with exactly `digits` digits after the decimal point,
/// round-half-even.
std::string to_decimal_string(const Rational& r, unsigned digits);

} // namespace evid
