#include "ucv/rootcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

namespace ucv {
namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// Results closer than this to the unit circle, or root clusters tighter than
// kClusterGap, are recomputed at 50 digits.
constexpr double kBoundaryBand = 1e-6;
constexpr double kClusterGap = 1e-3;

template <class Real>
Real modulus(const std::complex<Real>& z) {
  using std::sqrt;
  return sqrt(z.real() * z.real() + z.imag() * z.imag());
}

// Roots of the monic reversal q(w) = w^d + p_1 w^(d-1) + ... + p_d, i.e. the
// reciprocals of the roots of p. Each eigenvalue gets a few guarded Newton steps.
template <class Real>
std::vector<std::complex<Real>> reversed_roots(const std::vector<double>& p) {
  using Complex = std::complex<Real>;
  const int d = static_cast<int>(p.size()) - 1;

  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> companion =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  for (int j = 0; j < d; ++j) companion(0, j) = -Real(p[j + 1]);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = Real(1);

  Eigen::EigenSolver<decltype(companion)> solver(companion, /*computeEigenvectors=*/false);
  const auto& eig = solver.eigenvalues();

  auto eval = [&](const Complex& w, Complex& dq) {
    Complex q(Real(1));
    dq = Complex(Real(0));
    for (int k = 1; k <= d; ++k) {
      dq = dq * w + q;
      q = q * w + Complex(Real(p[k]));
    }
    return q;
  };

  std::vector<Complex> roots;
  roots.reserve(d);
  for (int i = 0; i < d; ++i) {
    Complex w(eig(i).real(), eig(i).imag());
    Complex dq;
    Complex q = eval(w, dq);
    for (int iter = 0; iter < 8; ++iter) {
      if (modulus(dq) == Real(0)) break;
      const Complex next = w - q / dq;
      Complex dnext;
      const Complex qnext = eval(next, dnext);
      if (!(modulus(qnext) < modulus(q))) break;
      w = next;
      q = qnext;
      dq = dnext;
    }
    roots.push_back(w);
  }
  return roots;
}

template <class Real>
Real max_modulus(const std::vector<std::complex<Real>>& roots) {
  Real m(0);
  for (const auto& r : roots) m = std::max(m, modulus(r));
  return m;
}

bool has_cluster(const std::vector<std::complex<long double>>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const long double scale = std::max<long double>(1, std::max(std::abs(roots[i]), std::abs(roots[j])));
      if (std::abs(roots[i] - roots[j]) < kClusterGap * scale) return true;
    }
  }
  return false;
}

}  // namespace

UnitPolynomial::UnitPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != 1.0) {
    throw std::invalid_argument("unit polynomial must have constant term 1");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

UnitPolynomial UnitPolynomial::from_tail(std::span<const double> b) {
  std::vector<double> c;
  c.reserve(b.size() + 1);
  c.push_back(1.0);
  c.insert(c.end(), b.begin(), b.end());
  return UnitPolynomial(std::move(c));
}

double min_root_modulus(const UnitPolynomial& p) {
  const auto& c = p.coeffs();
  switch (p.degree()) {
    case 0:
      return std::numeric_limits<double>::infinity();
    case 1:
      return 1.0 / std::abs(c[1]);
    default:
      break;
  }

  const auto roots = reversed_roots<long double>(c);
  const long double largest = max_modulus(roots);
  const long double estimate = 1.0L / largest;
  if (std::abs(estimate - 1.0L) > kBoundaryBand && !has_cluster(roots)) {
    return static_cast<double>(estimate);
  }

  const HighPrecision precise = HighPrecision(1) / max_modulus(reversed_roots<HighPrecision>(c));
  return precise.convert_to<double>();
}

bool nonvanishing_in_open_disk(const UnitPolynomial& p, double tol) {
  // 1 - sum |p_k| > 0 already keeps every root outside the closed disk.
  double l1 = 0.0;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) l1 += std::abs(p.coeffs()[k]);
  if (l1 < 1.0) return true;
  return min_root_modulus(p) >= 1.0 - tol;
}

}  // namespace ucv
