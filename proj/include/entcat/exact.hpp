#pragma once

// Exact rational arithmetic for boundary-case verification. Every fixture in
// this domain is a terminating decimal, so parsing decimal text straight into
// a rational removes all rounding from majorization verdicts at ties.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace entcat {

using Rational = boost::multiprecision::cpp_rational;

/// Parses a plain or scientific decimal literal ("0.25", "1e-3", "3/8")
/// into an exact rational. Throws Error(ParseError) on malformed text.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace entcat
