#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ucv/rational.hpp"

namespace ucv {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A power series c_0 + c_1 z + ... + c_N z^N taken modulo z^(N+1), with
/// exact rational coefficients. Binary operations truncate to the smaller of
/// the two operand orders.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Takes ownership of c_0..c_N; the order is coeffs.size() - 1. Throws on
  /// an empty list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  TruncatedSeries(std::initializer_list<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  /// The series z (or 0 when order is 0).
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Same series truncated to a smaller order, or zero-extended to a larger one.
  TruncatedSeries with_order(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
  friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// 1/s for s_0 = 1, via r_0 = 1, r_k = -sum_{j=1..k} s_j r_{k-j}.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// Term-wise derivative; the order drops by one. An order-0 series maps to
/// the zero series of order 0.
TruncatedSeries derivative(const TruncatedSeries& s);

/// s(t(z)) by Horner's scheme; requires t_0 = 0.
TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& t);

/// Compositional inverse of s = z + s_2 z^2 + ..., by back-substitution:
/// coefficient k of s(g) is g_k plus terms in g_1..g_{k-1}.
TruncatedSeries revert(const TruncatedSeries& s);

/// log(s) for s_0 = 1, computed as the antiderivative of s'/s.
TruncatedSeries log_unit(const TruncatedSeries& s);

}  // namespace ucv
