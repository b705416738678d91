#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace ucv {

inline constexpr double kDefaultRootTol = 1e-9;

/// Real polynomial 1 + p_1 z + ... + p_d z^d. Trailing zero coefficients are
/// stripped on construction.
class UnitPolynomial {
 public:
  /// coeffs[0] must equal 1; throws std::invalid_argument otherwise.
  explicit UnitPolynomial(std::vector<double> coeffs);

  /// Builds 1 + b_1 z + ... + b_N z^N from the tail b_1..b_N.
  static UnitPolynomial from_tail(std::span<const double> b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Smallest modulus over all complex roots; +infinity for degree 0.
double min_root_modulus(const UnitPolynomial& p);

/// True iff every root has modulus >= 1 - tol. Roots on the unit circle are
/// admitted.
bool nonvanishing_in_open_disk(const UnitPolynomial& p, double tol = kDefaultRootTol);

}  // namespace ucv
