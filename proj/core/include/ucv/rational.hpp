#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ucv {

// Exact arbitrary-precision rational. Expression templates are disabled so
// `auto` locals always hold values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Parses "3", "-0.25", "1/3", "+2.50". Decimals are read exactly, with no
/// binary floating point detour. Returns nullopt on malformed input or a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator ("-2", "3/2").
std::string to_string(const Rational& q);

/// Shortest exact decimal ("1.875", "-4", "0.02") when the denominator has
/// only the prime factors 2 and 5; nullopt otherwise.
std::optional<std::string> to_exact_decimal(const Rational& q);

/// Exact decimal when terminating, "p/q" otherwise.
std::string to_display_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace ucv
