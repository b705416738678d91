#pragma once

// Slow, textbook reference implementations. They work on plain coefficient
// vectors and never call into the library's series code.

#include <cstddef>
#include <vector>

#include "ucv/rational.hpp"

namespace oracle {

using ucv::Rational;
using Poly = std::vector<Rational>;

inline Poly truncate(Poly p, std::size_t order) {
  p.resize(order + 1);
  return p;
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly r(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly pow(const Poly& a, unsigned k, std::size_t order) {
  Poly r(order + 1);
  r[0] = 1;
  for (unsigned i = 0; i < k; ++i) r = mul(r, a, order);
  return r;
}

// Schoolbook long division 1 / d, d[0] != 0.
inline Poly long_divide_one(const Poly& d, std::size_t order) {
  Poly rem(order + 1);
  rem[0] = 1;
  Poly q(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    q[k] = rem[k] / d[0];
    for (std::size_t j = 0; j < d.size() && k + j <= order; ++j) rem[k + j] -= q[k] * d[j];
  }
  return q;
}

// sum_k s_k t^k with explicit powers.
inline Poly compose(const Poly& s, const Poly& t, std::size_t order) {
  Poly r(order + 1);
  for (std::size_t k = 0; k < s.size() && k <= order; ++k) {
    const Poly tk = pow(t, static_cast<unsigned>(k), order);
    for (std::size_t i = 0; i <= order; ++i) r[i] += s[k] * tk[i];
  }
  return r;
}

// Lagrange inversion: [w^n] g = (1/n) [z^(n-1)] (z / s(z))^n for s = z + ...
inline Poly lagrange_revert(const Poly& s, std::size_t order) {
  Poly g(order + 1);
  if (order == 0) return g;
  Poly s_over_z(order + 1);
  for (std::size_t k = 1; k < s.size() && k - 1 <= order; ++k) s_over_z[k - 1] = s[k];
  const Poly phi = long_divide_one(s_over_z, order);
  for (std::size_t n = 1; n <= order; ++n) g[n] = pow(phi, static_cast<unsigned>(n), order)[n - 1] / Rational(n);
  return g;
}

// Mercator series sum (-1)^(k+1) (s-1)^k / k.
inline Poly mercator_log(const Poly& s, std::size_t order) {
  Poly u = truncate(s, order);
  u[0] = 0;
  Poly r(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    const Poly uk = pow(u, static_cast<unsigned>(k), order);
    const Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
    for (std::size_t i = 0; i <= order; ++i) r[i] += c * uk[i];
  }
  return r;
}

// sum L^k / k! for L_0 = 0.
inline Poly exp_series(const Poly& l, std::size_t order) {
  Poly r(order + 1);
  Rational fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) fact *= Rational(k);
    const Poly lk = pow(l, static_cast<unsigned>(k), order);
    for (std::size_t i = 0; i <= order; ++i) r[i] += lk[i] / fact;
  }
  return r;
}

// Leibniz expansion for 1x1..3x3.
inline Rational det(const std::vector<std::vector<Rational>>& m) {
  switch (m.size()) {
    case 1:
      return m[0][0];
    case 2:
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    default:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
}

// det [c_{n+i+j}], c indexed by power of z.
inline Rational hankel(const Poly& c, std::size_t q, std::size_t n) {
  std::vector<std::vector<Rational>> m(q, std::vector<Rational>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) m[i][j] = c.at(n + i + j);
  return det(m);
}

}  // namespace oracle
