#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ucv/rational.hpp"

namespace ucv {

enum class FunctionalKind {
  A2,     // inverse coefficient A_2 = -a_2
  A3,
  A4,
  G1,     // logarithmic coefficients of the inverse
  G2,
  G3,
  H2F,    // H_2(2)(f)
  H3F,    // H_3(1)(f)
  H2INV,  // H_2(2)(f^-1)
  H3INV,  // H_3(1)(f^-1)
  Z23,    // a_2 a_3 - a_4
  Z24,    // a_2 a_4 - a_5
  A3C,    // a_3
  A4C,    // -a_4
  A5C,    // a_5
  AN,     // |a_n|, n carried separately
};

enum class Direction { Max, Min };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

/// An objective the search can extremize: a polynomial in b_1..b_4, or |a_n|
/// for AN(n), which reads b_1..b_{n-1}.
class Functional {
 public:
  static constexpr int kMaxCoefficientIndex = 8;

  constexpr Functional(FunctionalKind kind) : kind_(kind) {}
  /// |a_n| for 2 <= n <= kMaxCoefficientIndex; throws std::out_of_range otherwise.
  static Functional coefficient_modulus(int n);

  FunctionalKind kind() const { return kind_; }
  int n() const { return n_; }
  /// "A4", "H3INV", "AN(5)".
  std::string name() const;
  static std::optional<Functional> parse(std::string_view text);

  /// Highest b index the objective reads.
  int arity() const;

  /// b holds b_1, b_2, ...; missing trailing entries count as zero.
  double evaluate(std::span<const double> b) const;
  Rational evaluate(std::span<const Rational> b) const;

  friend bool operator==(const Functional&, const Functional&) = default;

 private:
  constexpr Functional(FunctionalKind kind, int n) : kind_(kind), n_(n) {}

  FunctionalKind kind_;
  int n_ = 0;
};

/// Every functional except AN, in report order.
inline constexpr std::array<Functional, 15> kNamedFunctionals = {
    FunctionalKind::A2,  FunctionalKind::A3,    FunctionalKind::A4,    FunctionalKind::G1,  FunctionalKind::G2,
    FunctionalKind::G3,  FunctionalKind::H2F,   FunctionalKind::H3F,   FunctionalKind::H2INV, FunctionalKind::H3INV,
    FunctionalKind::Z23, FunctionalKind::Z24,   FunctionalKind::A3C,   FunctionalKind::A4C, FunctionalKind::A5C};

/// Published bound for the functional at lambda in the given direction, or
/// nullopt when none exists. The a_4 upper bound and both a_5 bounds exist
/// only at lambda = 1.
std::optional<double> closed_form_bound(const Functional& fn, double lambda, Direction direction);

/// 1 + lambda + ... + lambda^(n-1), the conjectured bound on |a_n|.
double conjectured_coefficient_bound(int n, double lambda);

}  // namespace ucv
