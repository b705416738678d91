#pragma once

// Coefficient functionals of f = z / (1 + b_1 z + b_2 z^2 + ...) written as
// polynomials in b_1..b_4. Templated so the search can evaluate them in double
// while the model evaluates them over exact rationals.

#include <array>

namespace ucv::forms {

template <class T>
using Lead = std::array<T, 4>;  // b_1..b_4

template <class T>
T a2(const Lead<T>& b) {
  return -b[0];
}
template <class T>
T a3(const Lead<T>& b) {
  return b[0] * b[0] - b[1];
}
template <class T>
T a4(const Lead<T>& b) {
  return -b[2] + T(2) * b[0] * b[1] - b[0] * b[0] * b[0];
}
template <class T>
T a5(const Lead<T>& b) {
  const T b1sq = b[0] * b[0];
  return -b[3] + b[1] * b[1] + T(2) * b[0] * b[2] - T(3) * b1sq * b[1] + b1sq * b1sq;
}

// Inverse function coefficients.
template <class T>
T inv_a2(const Lead<T>& b) {
  return b[0];
}
template <class T>
T inv_a3(const Lead<T>& b) {
  return b[1] + b[0] * b[0];
}
template <class T>
T inv_a4(const Lead<T>& b) {
  return b[2] + T(3) * b[0] * b[1] + b[0] * b[0] * b[0];
}

// Logarithmic coefficients of the inverse function.
template <class T>
T gamma1(const Lead<T>& b) {
  return b[0] / T(2);
}
template <class T>
T gamma2(const Lead<T>& b) {
  return (b[1] + b[0] * b[0] / T(2)) / T(2);
}
template <class T>
T gamma3(const Lead<T>& b) {
  return (b[2] + T(2) * b[0] * b[1] + b[0] * b[0] * b[0] / T(3)) / T(2);
}

// Hankel determinants H_2(2) and H_3(1) of f and of its inverse.
template <class T>
T hankel22_f(const Lead<T>& b) {
  return b[0] * b[2] - b[1] * b[1];
}
template <class T>
T hankel31_f(const Lead<T>& b) {
  return b[1] * b[3] - b[2] * b[2];
}
template <class T>
T hankel22_inv(const Lead<T>& b) {
  return b[0] * b[2] + b[0] * b[0] * b[1] - b[1] * b[1];
}
template <class T>
T hankel31_inv(const Lead<T>& b) {
  return b[1] * b[3] - b[2] * b[2] + b[1] * b[1] * b[1];
}

// Zalcman functionals a_2 a_3 - a_4 and a_2 a_4 - a_5.
template <class T>
T zalcman23(const Lead<T>& b) {
  return -b[0] * b[1] + b[2];
}
template <class T>
T zalcman24(const Lead<T>& b) {
  return b[0] * b[0] * b[1] - b[0] * b[2] - b[1] * b[1] + b[3];
}

}  // namespace ucv::forms
