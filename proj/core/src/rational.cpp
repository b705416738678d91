#include "ucv/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ucv {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Boost reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

// Decimal or integer literal, sign already stripped.
std::optional<Rational> parse_unsigned_decimal(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) return std::nullopt;
    return Rational(decimal_integer(s));
  }
  const auto whole = s.substr(0, dot);
  const auto frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (!frac.empty() && !all_digits(frac)) return std::nullopt;
  const std::string digits = std::string(whole) + std::string(frac);
  return Rational(decimal_integer(digits), pow10(static_cast<unsigned>(frac.size())));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::optional<Rational> value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    const Integer d = decimal_integer(den);
    if (d == 0) return std::nullopt;
    value = Rational(decimal_integer(num), d);
  } else {
    value = parse_unsigned_decimal(text);
  }
  if (value && negative) *value = -*value;
  return value;
}

std::string to_string(const Rational& q) { return q.str(); }

std::optional<std::string> to_exact_decimal(const Rational& q) {
  Integer den = denominator(q);
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;

  const unsigned places = std::max(twos, fives);
  Integer scaled = numerator(q) * pow10(places) / denominator(q);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;

  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, 1, '.');
  }
  return (negative ? "-" : "") + digits;
}

std::string to_display_string(const Rational& q) {
  if (auto d = to_exact_decimal(q)) return *d;
  return to_string(q);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ucv
