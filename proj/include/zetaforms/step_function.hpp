#pragma once

// Right-continuous integer step functions on [0,1) with exact rational
// breakpoints, extended 1-periodically, and their two integrals:
// against d(psi) and against dx/x^2 (the latter exact).

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace zf {

struct StepFunction {
  std::vector<Rational> x;  // ascending, x[0] = 0; value v[i] on [x[i], x[i+1])
  std::vector<long> v;      // last interval is [x.back(), 1)

  long at(const Rational& t) const {
    Rational u = frac_part(t);
    size_t lo = 0, hi = x.size();
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (x[mid] <= u)
        lo = mid;
      else
        hi = mid;
    }
    return v[lo];
  }

  void merge_equal() {
    std::vector<Rational> nx;
    std::vector<long> nv;
    for (size_t i = 0; i < x.size(); ++i) {
      if (!nv.empty() && nv.back() == v[i]) continue;
      nx.push_back(x[i]);
      nv.push_back(v[i]);
    }
    x = std::move(nx);
    v = std::move(nv);
  }

  long max_value() const { return *std::max_element(v.begin(), v.end()); }
};

// integral_0^1 f d(psi): sum of f_i (psi(x_{i+1}) - psi(x_i)), endpoint 1.
// Requires f = 0 on a neighborhood of 0.
inline Real stieltjes_dpsi(const StepFunction& f, unsigned digits) {
  if (f.v.empty()) return Real(0);
  if (f.v.front() != 0 && !(f.x.size() == 1 && f.v[0] == 0))
    throw std::domain_error("step function must vanish near 0 (psi diverges)");
  PrecisionGuard guard(digits + 10);
  Real sum = 0;
  for (size_t i = 1; i < f.x.size(); ++i) {
    long dv = f.v[i] - f.v[i - 1];
    if (dv != 0) sum -= dv * digamma(f.x[i], digits + 4);  // telescoped by parts
  }
  // sum_i v_i (psi(x_{i+1}) - psi(x_i)) = v_last psi(1) - sum (v_i - v_{i-1}) psi(x_i)
  sum += f.v.back() * digamma(Rational(1), digits + 4);
  return sum;
}

// integral_0^{1/m} f(x) dx/x^2, exact
inline Rational inv_square_integral(const StepFunction& f, long m) {
  if (m < 1) throw std::domain_error("cut point 1/m requires m >= 1");
  Rational cut = Rational(1) / Rational(m);
  Rational total = 0;
  for (size_t i = 0; i < f.x.size(); ++i) {
    if (f.v[i] == 0) continue;
    Rational lo = f.x[i];
    Rational hi = (i + 1 < f.x.size()) ? f.x[i + 1] : Rational(1);
    if (lo >= cut) break;
    if (hi > cut) hi = cut;
    if (lo == 0) throw std::domain_error("step function must vanish near 0 (1/x^2 diverges)");
    total += Rational(f.v[i]) * (Rational(1) / lo - Rational(1) / hi);
  }
  return total;
}

}  // namespace zf
