#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace planarize {

// Exact arbitrary-precision rational, always in canonical form.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q" or "p" with an optional leading '-'; q must be non-zero.
Rational parse_rational(std::string_view text);
// Always "p/q" (integers as "p/1") so the wire format has one shape.
std::string format_rational(const Rational& r);
// Comma-separated list of parse_rational items.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace planarize
