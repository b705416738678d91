#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ucv/rational.hpp"
#include "ucv/rootcheck.hpp"
#include "ucv/series.hpp"

namespace ucv {

enum class NonMemberReason {
  NegativeCoefficient,
  LemmaSumExceeded,
  ZeroInDisk,
  LambdaOutOfRange,
};

std::string_view to_string(NonMemberReason reason);

class NonMember : public std::runtime_error {
 public:
  NonMember(NonMemberReason reason, const std::string& detail);
  NonMemberReason reason() const { return reason_; }

 private:
  NonMemberReason reason_;
};

/// A point of the U+(lambda) coefficient set: z/f(z) = 1 + sum b_n z^n with
/// b_n >= 0, sum (n-1) b_n <= lambda, and no zero of the denominator in the
/// open unit disk. Immutable; only obtainable through validate().
class ClassMember {
 public:
  static constexpr std::size_t kMinLength = 4;

  /// Checks, in order: 0 < lambda <= 1, b_n >= 0, the weighted sum, the root
  /// gate. Pads b with zeros to length 4. Throws NonMember on rejection and
  /// std::invalid_argument on an empty b.
  static ClassMember validate(const Rational& lambda, std::vector<Rational> b,
                              double root_tol = kDefaultRootTol);

  const Rational& lambda() const { return lambda_; }
  std::span<const Rational> b() const { return b_; }
  /// b_1..b_4.
  std::array<Rational, 4> lead() const { return {b_[0], b_[1], b_[2], b_[3]}; }
  /// 1 + b_1 z + ... + b_N z^N at the given order.
  TruncatedSeries denominator(std::size_t order) const;

  friend bool operator==(const ClassMember&, const ClassMember&) = default;

 private:
  ClassMember(Rational lambda, std::vector<Rational> b) : lambda_(std::move(lambda)), b_(std::move(b)) {}

  Rational lambda_;
  std::vector<Rational> b_;
};

struct DirectCoefficients {
  Rational a2, a3, a4, a5;
  friend bool operator==(const DirectCoefficients&, const DirectCoefficients&) = default;
};

struct InverseCoefficients {
  Rational A2, A3, A4;
  friend bool operator==(const InverseCoefficients&, const InverseCoefficients&) = default;
};

struct LogCoefficients {
  Rational gamma1, gamma2, gamma3;
  friend bool operator==(const LogCoefficients&, const LogCoefficients&) = default;
};

struct HankelValues {
  Rational h2f, h3f, h2inv, h3inv;
  friend bool operator==(const HankelValues&, const HankelValues&) = default;
};

struct ZalcmanValues {
  Rational z23, z24;
  friend bool operator==(const ZalcmanValues&, const ZalcmanValues&) = default;
};

struct CoefficientReport {
  DirectCoefficients a;
  InverseCoefficients inverse;
  LogCoefficients gamma;
  HankelValues hankel;
  ZalcmanValues zalcman;
  friend bool operator==(const CoefficientReport&, const CoefficientReport&) = default;
};

/// f(z) = z / (1 + sum b_n z^n) with coefficients a_0 = 0, a_1 = 1, ..., a_order.
TruncatedSeries f_series(const ClassMember& m, std::size_t order);

DirectCoefficients a_closed(const ClassMember& m);
InverseCoefficients inverse_closed(const ClassMember& m);
LogCoefficients gamma_closed(const ClassMember& m);
HankelValues hankel_values(const ClassMember& m);
ZalcmanValues zalcman_values(const ClassMember& m);
CoefficientReport report(const ClassMember& m);

/// (z/f)^2 f' - 1 assembled from series arithmetic; coefficient n equals
/// -(n-1) b_n.
TruncatedSeries u_residual(const ClassMember& m, std::size_t order);

/// det of the q x q Hankel matrix [c_{n+i+j}], where c_k is coefficient k of
/// the given series (so c_1 = 1 for a normalized function).
Rational hankel_determinant(const TruncatedSeries& s, std::size_t q, std::size_t n);

/// The same report computed the long way: series reciprocal for a_n,
/// reversion for A_n, the series logarithm for Gamma_n, and determinants for
/// the Hankel values. Used as an oracle against report().
CoefficientReport series_report(const ClassMember& m);

enum class Extremal {
  FLambda,     // z / (1 + (1+l) z + l z^2)
  Bz2,         // z / (1 + l z^2)
  Bz4over3,    // z / (1 + l z^4 / 3)
  H2UpperMix,  // z / (1 + (1 - l/2) z + (l/2) z^3)
  HalfZ3,      // z / (1 + (l/2) z^3)
  H3LowerMix,  // z / (1 + (l/2) z^2 + (l/6) z^4); attains the upper H_3(1)(f) bound
  LambdaZ3,    // see extremal_catalog
};

inline constexpr std::array kAllExtremals = {Extremal::FLambda,  Extremal::Bz2,        Extremal::Bz4over3,
                                             Extremal::H2UpperMix, Extremal::HalfZ3, Extremal::H3LowerMix,
                                             Extremal::LambdaZ3};

std::string_view to_string(Extremal e);
std::optional<Extremal> parse_extremal(std::string_view name);

/// Validated member for a named extremal function. The denominator printed
/// for LambdaZ3, 1 + l z^3, has weighted sum 2l > l and is never a member;
/// the function that attains the H_3(1)(f^-1) = l^3 bound it is cited for is
/// z / (1 + l z^2), which is what LambdaZ3 returns.
ClassMember extremal_catalog(Extremal name, const Rational& lambda);

nlohmann::json to_json(const ClassMember& m);
nlohmann::json to_json(const CoefficientReport& r);
/// Member fields plus report fields in one flat object.
nlohmann::json to_json(const ClassMember& m, const CoefficientReport& r);

/// Reads the flat shape back. Throws std::invalid_argument on malformed
/// fields and NonMember when the member does not validate.
ClassMember member_from_json(const nlohmann::json& j);
CoefficientReport report_from_json(const nlohmann::json& j);

}  // namespace ucv
