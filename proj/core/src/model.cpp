#include "ucv/model.hpp"

#include <algorithm>

#include "ucv/coefficient_forms.hpp"

namespace ucv {

std::string_view to_string(NonMemberReason reason) {
  switch (reason) {
    case NonMemberReason::NegativeCoefficient:
      return "negative coefficient";
    case NonMemberReason::LemmaSumExceeded:
      return "lemma-sum exceeded";
    case NonMemberReason::ZeroInDisk:
      return "zero in disk";
    case NonMemberReason::LambdaOutOfRange:
      return "lambda out of range";
  }
  return "unknown";
}

NonMember::NonMember(NonMemberReason reason, const std::string& detail)
    : std::runtime_error(std::string(to_string(reason)) + (detail.empty() ? "" : ": " + detail)),
      reason_(reason) {}

ClassMember ClassMember::validate(const Rational& lambda, std::vector<Rational> b, double root_tol) {
  if (b.empty()) throw std::invalid_argument("b-vector must have at least one entry");
  if (lambda <= 0 || lambda > 1) {
    throw NonMember(NonMemberReason::LambdaOutOfRange, "lambda = " + to_string(lambda));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) {
      throw NonMember(NonMemberReason::NegativeCoefficient,
                      "b_" + std::to_string(i + 1) + " = " + to_string(b[i]));
    }
  }

  Rational weighted = 0;
  for (std::size_t n = 2; n <= b.size(); ++n) weighted += Rational(n - 1) * b[n - 1];
  if (weighted > lambda) {
    throw NonMember(NonMemberReason::LemmaSumExceeded,
                    "sum (n-1) b_n = " + to_display_string(weighted) + " > " + to_display_string(lambda));
  }

  std::vector<double> tail(b.size());
  std::transform(b.begin(), b.end(), tail.begin(), [](const Rational& q) { return to_double(q); });
  const auto denominator = UnitPolynomial::from_tail(tail);
  if (!nonvanishing_in_open_disk(denominator, root_tol)) {
    throw NonMember(NonMemberReason::ZeroInDisk,
                    "min root modulus " + std::to_string(min_root_modulus(denominator)));
  }

  if (b.size() < kMinLength) b.resize(kMinLength);

  // Consequence of the two gates above, never imposed on its own.
  if (to_double(b[0]) > to_double(lambda) + 1.0 + 1e-6) {
    throw std::logic_error("validated member violates b_1 <= 1 + lambda");
  }
  return ClassMember(lambda, std::move(b));
}

TruncatedSeries ClassMember::denominator(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= std::min(order, b_.size()); ++n) c[n] = b_[n - 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries f_series(const ClassMember& m, std::size_t order) {
  if (order < 1) throw SeriesError("f_series: order must be at least 1");
  const TruncatedSeries quotient = reciprocal(m.denominator(order - 1));
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 1; k <= order; ++k) c[k] = quotient[k - 1];
  return TruncatedSeries(std::move(c));
}

DirectCoefficients a_closed(const ClassMember& m) {
  const auto b = m.lead();
  return {forms::a2(b), forms::a3(b), forms::a4(b), forms::a5(b)};
}

InverseCoefficients inverse_closed(const ClassMember& m) {
  const auto b = m.lead();
  return {forms::inv_a2(b), forms::inv_a3(b), forms::inv_a4(b)};
}

LogCoefficients gamma_closed(const ClassMember& m) {
  const auto b = m.lead();
  return {forms::gamma1(b), forms::gamma2(b), forms::gamma3(b)};
}

HankelValues hankel_values(const ClassMember& m) {
  const auto b = m.lead();
  return {forms::hankel22_f(b), forms::hankel31_f(b), forms::hankel22_inv(b), forms::hankel31_inv(b)};
}

ZalcmanValues zalcman_values(const ClassMember& m) {
  const auto b = m.lead();
  return {forms::zalcman23(b), forms::zalcman24(b)};
}

CoefficientReport report(const ClassMember& m) {
  return {a_closed(m), inverse_closed(m), gamma_closed(m), hankel_values(m), zalcman_values(m)};
}

TruncatedSeries u_residual(const ClassMember& m, std::size_t order) {
  if (order < 2) throw SeriesError("u_residual: order must be at least 2");
  const TruncatedSeries z_over_f = m.denominator(order);
  const TruncatedSeries f_prime = derivative(f_series(m, order + 1));
  return mul(mul(z_over_f, z_over_f), f_prime) - TruncatedSeries::constant(1, order);
}

Rational hankel_determinant(const TruncatedSeries& s, std::size_t q, std::size_t n) {
  if (q == 0) return 1;
  if (n + 2 * q - 2 > s.order()) throw SeriesError("hankel_determinant: series too short");

  std::vector<std::vector<Rational>> a(q, std::vector<Rational>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) a[i][j] = s[n + i + j];
  }

  // Gaussian elimination with exact pivots.
  Rational det = 1;
  for (std::size_t col = 0; col < q; ++col) {
    std::size_t pivot = col;
    while (pivot < q && a[pivot][col] == 0) ++pivot;
    if (pivot == q) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < q; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < q; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

CoefficientReport series_report(const ClassMember& m) {
  const TruncatedSeries f = f_series(m, 5);
  const TruncatedSeries inverse = revert(f);

  // log(f^-1(w)/w) = sum 2 Gamma_n w^n.
  std::vector<Rational> quotient(inverse.coeffs().begin() + 1, inverse.coeffs().end());
  const TruncatedSeries log_quotient = log_unit(TruncatedSeries(std::move(quotient)));

  CoefficientReport r;
  r.a = {f[2], f[3], f[4], f[5]};
  r.inverse = {inverse[2], inverse[3], inverse[4]};
  r.gamma = {log_quotient[1] / 2, log_quotient[2] / 2, log_quotient[3] / 2};
  r.hankel = {hankel_determinant(f, 2, 2), hankel_determinant(f, 3, 1), hankel_determinant(inverse, 2, 2),
              hankel_determinant(inverse, 3, 1)};
  r.zalcman = {f[2] * f[3] - f[4], f[2] * f[4] - f[5]};
  return r;
}

std::string_view to_string(Extremal e) {
  switch (e) {
    case Extremal::FLambda:
      return "FLambda";
    case Extremal::Bz2:
      return "Bz2";
    case Extremal::Bz4over3:
      return "Bz4over3";
    case Extremal::H2UpperMix:
      return "H2UpperMix";
    case Extremal::HalfZ3:
      return "HalfZ3";
    case Extremal::H3LowerMix:
      return "H3LowerMix";
    case Extremal::LambdaZ3:
      return "LambdaZ3";
  }
  return "unknown";
}

std::optional<Extremal> parse_extremal(std::string_view name) {
  for (Extremal e : kAllExtremals) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

ClassMember extremal_catalog(Extremal name, const Rational& lambda) {
  const Rational half = lambda / 2;
  std::vector<Rational> b(4);
  switch (name) {
    case Extremal::FLambda:
      b = {1 + lambda, lambda, 0, 0};
      break;
    case Extremal::Bz2:
    case Extremal::LambdaZ3:
      b = {0, lambda, 0, 0};
      break;
    case Extremal::Bz4over3:
      b = {0, 0, 0, lambda / 3};
      break;
    case Extremal::H2UpperMix:
      b = {1 - half, 0, half, 0};
      break;
    case Extremal::HalfZ3:
      b = {0, 0, half, 0};
      break;
    case Extremal::H3LowerMix:
      b = {0, half, 0, lambda / 6};
      break;
  }
  return ClassMember::validate(lambda, std::move(b));
}

}  // namespace ucv
