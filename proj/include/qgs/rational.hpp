#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qgs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational arithmetic. Every probability and amplitude claim in
/// this library is stated and checked as an exact Rat; floating point
/// appears only when formatting reports.
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient, exact.
BigInt binomial(unsigned n, unsigned k);

/// Parses "3/4", "0.25" or "7" into an exact rational.
Rat parse_rational(std::string_view text);

/// "num/den" in lowest terms; "num" when the denominator is 1.
std::string to_fraction_string(const Rat& r);

/// Decimal expansion truncated toward zero, e.g. (3/4, 3) -> "0.750".
std::string to_decimal_string(const Rat& r, int digits);

double to_double(const Rat& r);

}  // namespace qgs
