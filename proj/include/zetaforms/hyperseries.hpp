#pragma once

// Certified summation of hypergeometric-type series whose terms are
// explicit finite products
//
//   term(t) = scalar * (h0 + 2t)? * prod_i (t + n_i) / prod_i (t + d_i),
//
// optionally with sign (-1)^t.  All offsets must keep the factors
// positive from the start index on, so |term| is transparent.
//
// Two tail certificates:
//  * generic: with N = max numerator offset, d = min denominator offset
//    and kappa = #den - #num - (prefactor ? 1 : 0) >= 2, for t >= T
//      |term(t)| <= 2|scalar| * rho(T)^{#num'} * (t+d)^{-kappa},
//      rho(T) = max(1, (T+N)/(T+d)),
//    summing to 2|scalar| rho^{#num'} ((T+d)^{-kappa} + (T+d)^{1-kappa}/(kappa-1));
//  * alternating: once D(t) - N(t) > 0 is certified for all t >= T by
//    nonnegativity of the shifted coefficients (so |term| decreases),
//    the tail is bounded by the first omitted |term|.

#include "zetaforms/rational.hpp"
#include "zetaforms/real.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace zf {

namespace detail {

// coefficients of prod (x + c_i), ascending powers
inline std::vector<Int> expand_offsets(const std::vector<Int>& cs) {
  std::vector<Int> p{Int(1)};
  for (const Int& c : cs) {
    std::vector<Int> q(p.size() + 1, Int(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * c;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// coefficients of p(x + s)
inline std::vector<Int> poly_shift(const std::vector<Int>& p, long s) {
  std::vector<Int> r(p.size(), Int(0));
  for (size_t m = 0; m < p.size(); ++m) {
    Int pw = 1;
    for (size_t k = m + 1; k-- > 0;) {
      r[k] += p[m] * binomial(long(m), long(k)) * pw;
      pw *= s;
    }
  }
  return r;
}

}  // namespace detail

struct HyperTerm {
  Rational scalar = Rational(1);
  std::optional<long> pref_h0;  // factor (h0 + 2t)
  std::vector<long> num;        // numerator offsets
  std::vector<long> den;        // denominator offsets
  bool alternating = false;     // extra factor (-1)^t

  long decay() const {
    return long(den.size()) - long(num.size()) - (pref_h0 ? 1 : 0);
  }

  Rational eval(long t) const {
    Rational v = scalar;
    for (long o : num) v *= (Rational(t) + o);
    for (long o : den) v /= (Rational(t) + o);
    if (pref_h0) v *= (Rational(*pref_h0) + 2 * t);
    return v;
  }

  // term(t+1)/term(t), sign factor excluded
  Rational ratio(long t) const {
    Int n = 1, d = 1;
    for (long o : num) {
      n *= (t + o + 1);
      d *= (t + o);
    }
    for (long o : den) {
      n *= (t + o);
      d *= (t + o + 1);
    }
    if (pref_h0) {
      n *= (*pref_h0 + 2 * t + 2);
      d *= (*pref_h0 + 2 * t);
    }
    return Rational(n) / Rational(d);
  }

  // certifies |term| strictly decreasing on [T, infinity):
  // W(t) = N(t) D(t+1) - N(t+1) D(t) > 0 for t >= T, shown by
  // nonnegativity of the coefficients of W(x+T) with W(T) > 0
  bool decreasing_from(long T) const {
    auto make_n = [&](long shift) {
      std::vector<Int> offs;
      for (long o : num) offs.push_back(Int(o + shift));
      auto p = detail::expand_offsets(offs);
      if (pref_h0) {
        std::vector<Int> q(p.size() + 1, Int(0));
        for (size_t i = 0; i < p.size(); ++i) {
          q[i] += p[i] * Int(*pref_h0 + 2 * shift);
          q[i + 1] += 2 * p[i];
        }
        p = std::move(q);
      }
      return p;
    };
    auto make_d = [&](long shift) {
      std::vector<Int> offs;
      for (long o : den) offs.push_back(Int(o + shift));
      return detail::expand_offsets(offs);
    };
    auto w = detail::poly_mul(make_n(0), make_d(1));
    auto w2 = detail::poly_mul(make_n(1), make_d(0));
    for (size_t i = 0; i < w.size(); ++i) w[i] -= w2[i];
    auto ws = detail::poly_shift(w, T);
    if (ws.empty() || ws[0] <= 0) return false;
    for (const Int& c : ws)
      if (c < 0) return false;
    return true;
  }
};

// Sum for t = t_start .. infinity with |error| < 10^-digits.
inline Real hyperseries_sum(const HyperTerm& h, long t_start, unsigned digits) {
  for (long o : h.den)
    if (t_start + o <= 0) throw std::domain_error("series start hits a pole");
  for (long o : h.num)
    if (t_start + o <= 0) throw std::domain_error("series factors must stay positive");
  if (h.pref_h0 && *h.pref_h0 + 2 * t_start <= 0)
    throw std::domain_error("series factors must stay positive");
  long kappa = h.decay();
  if (kappa < 2 && !h.alternating)
    throw std::domain_error("series does not satisfy the O(t^-2) decay condition");

  PrecisionGuard guard(digits + 15);
  Real eps = pow10(-long(digits) - 2);

  long nmax = 1;
  for (long o : h.num) nmax = std::max(nmax, o);
  if (h.pref_h0) nmax = std::max(nmax, (*h.pref_h0 + 1) / 2);
  long dmin = h.den.empty() ? 0 : *std::min_element(h.den.begin(), h.den.end());
  long num_count = long(h.num.size()) + (h.pref_h0 ? 1 : 0);

  Real sum = 0;
  Real term = to_real(h.eval(t_start));
  Real scale_abs = abs(to_real(h.scalar));
  bool decreasing = false;
  long t = t_start;
  const long hard_cap = 20'000'000;
  while (true) {
    sum += (h.alternating && ((t - t_start) & 1)) ? -term : term;
    bool checkpoint = (t - t_start < 4) || ((t - t_start) % (t < 4096 ? 64 : 1024) == 0);
    if (checkpoint) {
      long tt = t + 1;
      if (h.alternating) {
        if (!decreasing) decreasing = h.decreasing_from(t);
        if (decreasing && abs(term) < eps) break;
      }
      if (kappa >= 2 && tt + dmin >= 1) {
        Real td = Real(tt + dmin);
        Real rho = (nmax > dmin) ? Real(tt + nmax) / td : Real(1);
        Real bound = 2 * scale_abs;
        for (long i = 0; i < num_count; ++i) bound *= rho;
        bound *= (pow(td, -int(kappa)) + pow(td, 1 - int(kappa)) / (kappa - 1));
        if (bound < eps) break;
      }
    }
    term *= to_real(h.ratio(t));
    ++t;
    if (t - t_start > hard_cap) throw std::runtime_error("hyperseries: no certified tail");
  }
  return sum;
}

}  // namespace zf
