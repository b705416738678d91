#include "ucv/series.hpp"

#include <algorithm>
#include <utility>

namespace ucv {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeriesError("truncated series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Rational> coeffs)
    : TruncatedSeries(std::vector<Rational>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), c.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
  const std::size_t n = std::min(s.order(), t.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) r.coeffs_[k] = s[k] + t[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
  const std::size_t n = std::min(s.order(), t.order());
  TruncatedSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) r.coeffs_[k] = s[k] - t[k];
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  TruncatedSeries r(s.order());
  for (std::size_t k = 0; k <= s.order(); ++k) r.coeffs_[k] = c * s[k];
  return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  const std::size_t n = std::min(s.order(), t.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += s[i] * t[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (s[0] != 1) throw SeriesError("reciprocal: constant term must be 1");
  const std::size_t n = s.order();
  std::vector<Rational> r(n + 1);
  r[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
    r[k] = -acc;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries(0);
  std::vector<Rational> d(s.order());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = Rational(k + 1) * s[k + 1];
  return TruncatedSeries(std::move(d));
}

TruncatedSeries compose(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (t[0] != 0) throw SeriesError("compose: inner series must have zero constant term");
  const std::size_t n = std::min(s.order(), t.order());
  // Horner: s_N, then acc = acc * t + s_k down to k = 0.
  TruncatedSeries acc = TruncatedSeries::constant(s[n], n);
  const TruncatedSeries inner = t.with_order(n);
  for (std::size_t k = n; k-- > 0;) {
    acc = mul(acc, inner) + TruncatedSeries::constant(s[k], n);
  }
  return acc;
}

TruncatedSeries revert(const TruncatedSeries& s) {
  if (s[0] != 0) throw SeriesError("revert: constant term must be 0");
  const std::size_t n = s.order();
  if (n == 0) return TruncatedSeries(0);
  if (s[1] != 1) throw SeriesError("revert: linear coefficient must be 1");

  std::vector<Rational> g(n + 1);
  g[1] = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    // With g_k = 0, coefficient k of s(g) collects everything except g_k itself.
    const TruncatedSeries partial = compose(s, TruncatedSeries(std::vector<Rational>(g.begin(), g.begin() + k + 1)));
    g[k] = -partial[k];
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries log_unit(const TruncatedSeries& s) {
  if (s[0] != 1) throw SeriesError("log_unit: constant term must be 1");
  const std::size_t n = s.order();
  TruncatedSeries result(n);
  if (n == 0) return result;
  const TruncatedSeries q = mul(derivative(s), reciprocal(s.with_order(n - 1)));
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 1; k <= n; ++k) c[k] = q[k - 1] / Rational(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace ucv
