#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tricover {

// Exact arbitrary-precision arithmetic. Every core computation runs on
// Rational; doubles appear only at the rendering boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Shorthand for small literal fractions: rat(2, 3) == 2/3 in lowest terms.
Rational rat(long long num, long long den = 1);

/// Largest integer <= q.
BigInt floor_rat(const Rational& q);

/// Smallest integer >= q.
BigInt ceil_rat(const Rational& q);

/// q modulo 1, always in [0, 1). frac(-12/5) == 3/5.
Rational frac_rat(const Rational& q);

/// Parses "p/q", a plain integer, or a terminating decimal ("0.3" -> 3/10).
/// Decimals convert exactly, never through binary floating point.
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms text form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Lossy conversion for display/rendering only.
double to_double(const Rational& q);

}  // namespace tricover
