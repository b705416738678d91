#include "ucv/functional.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ucv/coefficient_forms.hpp"

namespace ucv {
namespace {

struct NamedKind {
  FunctionalKind kind;
  std::string_view name;
};

constexpr std::array<NamedKind, 15> kNames = {{
    {FunctionalKind::A2, "A2"},   {FunctionalKind::A3, "A3"},       {FunctionalKind::A4, "A4"},
    {FunctionalKind::G1, "G1"},   {FunctionalKind::G2, "G2"},       {FunctionalKind::G3, "G3"},
    {FunctionalKind::H2F, "H2F"}, {FunctionalKind::H3F, "H3F"},     {FunctionalKind::H2INV, "H2INV"},
    {FunctionalKind::H3INV, "H3INV"}, {FunctionalKind::Z23, "Z23"}, {FunctionalKind::Z24, "Z24"},
    {FunctionalKind::A3C, "A3C"}, {FunctionalKind::A4C, "A4C"},     {FunctionalKind::A5C, "A5C"},
}};

template <class T>
forms::Lead<T> lead_of(std::span<const T> b) {
  forms::Lead<T> lead{T(0), T(0), T(0), T(0)};
  for (std::size_t i = 0; i < 4 && i < b.size(); ++i) lead[i] = b[i];
  return lead;
}

// Coefficient n of z / (1 + b_1 z + ...): r_{n-1} of the reciprocal recursion.
template <class T>
T direct_coefficient(std::span<const T> b, int n) {
  std::vector<T> r(n, T(0));
  r[0] = T(1);
  for (int k = 1; k < n; ++k) {
    T acc(0);
    for (int j = 1; j <= k && j <= static_cast<int>(b.size()); ++j) acc += b[j - 1] * r[k - j];
    r[k] = -acc;
  }
  return r[n - 1];
}

template <class T>
T evaluate_impl(const Functional& fn, std::span<const T> b) {
  const auto lead = lead_of(b);
  switch (fn.kind()) {
    case FunctionalKind::A2:
      return forms::inv_a2(lead);
    case FunctionalKind::A3:
      return forms::inv_a3(lead);
    case FunctionalKind::A4:
      return forms::inv_a4(lead);
    case FunctionalKind::G1:
      return forms::gamma1(lead);
    case FunctionalKind::G2:
      return forms::gamma2(lead);
    case FunctionalKind::G3:
      return forms::gamma3(lead);
    case FunctionalKind::H2F:
      return forms::hankel22_f(lead);
    case FunctionalKind::H3F:
      return forms::hankel31_f(lead);
    case FunctionalKind::H2INV:
      return forms::hankel22_inv(lead);
    case FunctionalKind::H3INV:
      return forms::hankel31_inv(lead);
    case FunctionalKind::Z23:
      return forms::zalcman23(lead);
    case FunctionalKind::Z24:
      return forms::zalcman24(lead);
    case FunctionalKind::A3C:
      return forms::a3(lead);
    case FunctionalKind::A4C:
      return -forms::a4(lead);
    case FunctionalKind::A5C:
      return forms::a5(lead);
    case FunctionalKind::AN: {
      T value = direct_coefficient(b, fn.n());
      return value < T(0) ? T(-value) : value;
    }
  }
  throw std::logic_error("unhandled functional");
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::Max ? "max" : "min"; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "max") return Direction::Max;
  if (text == "min") return Direction::Min;
  return std::nullopt;
}

Functional Functional::coefficient_modulus(int n) {
  if (n < 2 || n > kMaxCoefficientIndex) throw std::out_of_range("coefficient index must lie in [2, 8]");
  return Functional(FunctionalKind::AN, n);
}

std::string Functional::name() const {
  if (kind_ == FunctionalKind::AN) return "AN(" + std::to_string(n_) + ")";
  for (const auto& entry : kNames) {
    if (entry.kind == kind_) return std::string(entry.name);
  }
  return "?";
}

std::optional<Functional> Functional::parse(std::string_view text) {
  for (const auto& entry : kNames) {
    if (entry.name == text) return Functional(entry.kind);
  }
  if (text.size() == 5 && text.substr(0, 3) == "AN(" && text.back() == ')') {
    const char digit = text[3];
    if (digit >= '2' && digit <= '8') return coefficient_modulus(digit - '0');
  }
  return std::nullopt;
}

int Functional::arity() const {
  switch (kind_) {
    case FunctionalKind::A2:
    case FunctionalKind::G1:
      return 1;
    case FunctionalKind::A3:
    case FunctionalKind::G2:
    case FunctionalKind::A3C:
      return 2;
    case FunctionalKind::A4:
    case FunctionalKind::G3:
    case FunctionalKind::H2F:
    case FunctionalKind::H2INV:
    case FunctionalKind::Z23:
    case FunctionalKind::A4C:
      return 3;
    case FunctionalKind::H3F:
    case FunctionalKind::H3INV:
    case FunctionalKind::Z24:
    case FunctionalKind::A5C:
      return 4;
    case FunctionalKind::AN:
      return n_ - 1;
  }
  return 4;
}

double Functional::evaluate(std::span<const double> b) const { return evaluate_impl(*this, b); }

Rational Functional::evaluate(std::span<const Rational> b) const { return evaluate_impl(*this, b); }

double conjectured_coefficient_bound(int n, double lambda) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= lambda;
  }
  return sum;
}

std::optional<double> closed_form_bound(const Functional& fn, double lambda, Direction direction) {
  const double l = lambda;
  const bool max = direction == Direction::Max;
  const bool at_one = lambda == 1.0;
  switch (fn.kind()) {
    case FunctionalKind::A2:
      return max ? 1 + l : 0.0;
    case FunctionalKind::A3:
      return max ? 1 + 3 * l + l * l : 0.0;
    case FunctionalKind::A4:
      return max ? (1 + l) * (1 + 5 * l + l * l) : 0.0;
    case FunctionalKind::G1:
      return max ? (1 + l) / 2 : 0.0;
    case FunctionalKind::G2:
      return max ? (1 + 4 * l + l * l) / 4 : 0.0;
    case FunctionalKind::G3:
      return max ? (1 + l) * (1 + 8 * l + l * l) / 6 : 0.0;
    case FunctionalKind::H2F:
      return max ? (1 - l / 2) * l / 2 : -l * l;
    case FunctionalKind::H3F:
      return max ? l * l / 12 : -l * l / 4;
    case FunctionalKind::H2INV:
      return max ? l * (1 + l + l * l) : -l * l;
    case FunctionalKind::H3INV:
      return max ? l * l * l : -l * l / 4;
    case FunctionalKind::Z23:
      return max ? l / 2 : -(1 + l) * l;
    case FunctionalKind::Z24:
      return max ? l + l * l + l * l * l : -(l + l * l + l * l * l);
    case FunctionalKind::A3C:
      return max ? 1 + l + l * l : -l;
    case FunctionalKind::A4C:
      if (max) return 1 + l + l * l + l * l * l;
      if (at_one) return -(4.0 / 3.0) * std::sqrt(2.0 / 3.0);
      return std::nullopt;
    case FunctionalKind::A5C:
      if (!at_one) return std::nullopt;
      return max ? 5.0 : -9.0 / 4.0;
    case FunctionalKind::AN:
      if (!max) return std::nullopt;
      return conjectured_coefficient_bound(fn.n(), l);
  }
  return std::nullopt;
}

}  // namespace ucv
