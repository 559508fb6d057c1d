#pragma once

// All complex roots of an integer-coefficient polynomial by
// Durand-Kerner iteration at working precision.

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

#include <stdexcept>
#include <vector>

namespace zf {

// coefficients ascending; returns the deg(p) roots
inline std::vector<CReal> polynomial_roots(const std::vector<Int>& coeff, unsigned digits) {
  size_t deg = coeff.size();
  while (deg > 0 && coeff[deg - 1] == 0) --deg;
  if (deg < 2) return {};
  --deg;  // degree
  PrecisionGuard guard(digits + 20);

  std::vector<CReal> c(deg + 1);
  Real lead = to_real(coeff[deg]);
  for (size_t i = 0; i <= deg; ++i) c[i] = CReal(to_real(coeff[i]) / lead);

  // Cauchy-style inclusion radius
  Real radius = 0;
  for (size_t i = 0; i < deg; ++i) radius = max(radius, abs(c[i]));
  radius = 1 + radius;

  // spread starting points on a slightly irrational spiral
  std::vector<CReal> z(deg);
  Real pi = 4 * atan(Real(1));
  for (size_t k = 0; k < deg; ++k) {
    Real ang = (2 * pi * long(k)) / long(deg) + Real(4) / 10;
    Real rad = radius * (Real(1) / 2 + Real(long(k) + 1) / (2 * long(deg)));
    z[k] = CReal(rad * cos(ang), rad * sin(ang));
  }

  auto eval = [&](const CReal& x) {
    CReal v = c[deg];
    for (size_t i = deg; i-- > 0;) v = v * x + c[i];
    return v;
  };

  Real tol = pow10(-long(digits) - 5);
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (size_t k = 0; k < deg; ++k) {
      CReal denom{Real(1), Real(0)};
      for (size_t j = 0; j < deg; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      CReal delta = eval(z[k]) / denom;
      z[k] -= delta;
      worst = max(worst, abs(delta));
    }
    if (worst < tol) {
      // final residual sanity
      for (const auto& root : z)
        if (abs(eval(root)) > pow10(-long(digits) / 2)) break;
      return z;
    }
  }
  throw std::runtime_error("polynomial_roots: Durand-Kerner did not converge");
}

}  // namespace zf
