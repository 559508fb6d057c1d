#pragma once

// A linear form  c_0 + sum_s c_s zeta(s)  with exact rational
// coefficients and finitely many nonzero entries.

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

#include <map>

namespace zf {

struct LinearForm {
  // key 0 holds the constant term, key s >= 2 the coefficient of zeta(s)
  std::map<int, Rational> coeff;

  Rational coefficient(int s) const {
    auto it = coeff.find(s);
    return it == coeff.end() ? Rational(0) : it->second;
  }

  void set(int s, const Rational& v) {
    if (v == 0)
      coeff.erase(s);
    else
      coeff[s] = v;
  }

  bool operator==(const LinearForm& o) const {
    for (const auto& [s, v] : coeff)
      if (o.coefficient(s) != v) return false;
    for (const auto& [s, v] : o.coeff)
      if (coefficient(s) != v) return false;
    return true;
  }

  LinearForm scaled(const Rational& c) const {
    LinearForm r;
    for (const auto& [s, v] : coeff) r.set(s, v * c);
    return r;
  }

  // Numeric value with |error| < 10^-digits.  The coefficients may be
  // huge with massive cancellation, so the working precision is padded
  // by their magnitude.
  Real value(unsigned digits) const {
    size_t mag = 0;
    for (const auto& [s, c] : coeff) mag = std::max(mag, num(c).str().size() + den(c).str().size());
    PrecisionGuard guard(digits + unsigned(mag) + 12);
    Real v = 0;
    for (const auto& [s, c] : coeff) {
      if (s == 0) {
        v += to_real(c);
        continue;
      }
      v += to_real(c) * zeta_int(s, digits + unsigned(mag) + 6);
    }
    return v;
  }
};

}  // namespace zf
