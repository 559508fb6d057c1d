#pragma once

// Elementary rational-function bricks
//
//   R(a,b;t) = (t+b)(t+b+1)...(t+a-1) / (a-b)!          for a >= b,
//   R(a,b;t) = (b-a-1)! / ((t+a)(t+a+1)...(t+b-1))      for a < b,
//
// products of bricks with an optional (h0 + 2t) prefactor, exact local
// Laurent expansions around integer points, and the p-adic lower bounds
// for brick derivatives.  Derivatives are never formed symbolically:
// j-th derivatives are read off truncated power-series products, which
// mirrors the Leibniz-rule structure of the estimates.

#include "zetaforms/primes.hpp"
#include "zetaforms/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zf {

struct BrickPole : std::runtime_error {
  explicit BrickPole(long ord)
      : std::runtime_error("evaluation at a pole of order " + std::to_string(ord)),
        order(ord) {}
  long order;
};

struct Brick {
  long a = 0;
  long b = 0;

  bool polynomial() const { return a >= b; }
  // degree as a rational function: a-b (negative for pole bricks)
  long degree() const { return a - b; }
};

inline Rational brick_eval(const Brick& br, const Rational& t) {
  if (br.polynomial()) {
    Rational r = 1;
    for (long l = br.b; l < br.a; ++l) r *= (t + l);
    return r / Rational(factorial(br.a - br.b));
  }
  Rational d = 1;
  for (long l = br.a; l < br.b; ++l) {
    Rational f = t + l;
    if (f == 0) throw BrickPole(1);
    d *= f;
  }
  return Rational(factorial(br.b - br.a - 1)) / d;
}

// Truncated Laurent series in u: coeff[i] multiplies u^{lead+i}.
struct LaurentSeries {
  long lead = 0;
  std::vector<Rational> c;

  long top() const { return lead + long(c.size()) - 1; }

  Rational coefficient(long j) const {
    if (j < lead) return Rational(0);
    if (j > top()) throw std::out_of_range("Laurent coefficient beyond truncation");
    return c[size_t(j - lead)];
  }

  // strip leading zero coefficients so that `lead` is exact; an all-zero
  // truncation keeps coefficient(j) = 0 for every j <= requested_top
  void normalize(long requested_top) {
    size_t drop = 0;
    while (drop < c.size() && c[drop] == 0) ++drop;
    if (drop == c.size()) {
      c.clear();
      lead = requested_top + 1;
      return;
    }
    if (drop > 0) {
      c.erase(c.begin(), c.begin() + long(drop));
      lead += long(drop);
    }
  }

  // product truncated so that exponents above `hi` are dropped
  LaurentSeries mul(const LaurentSeries& o, long hi) const {
    LaurentSeries r;
    r.lead = lead + o.lead;
    long len = hi - r.lead + 1;
    if (len <= 0) return r;
    r.c.assign(size_t(len), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      long ei = lead + long(i);
      for (size_t j = 0; j < o.c.size(); ++j) {
        long e = ei + o.lead + long(j);
        if (e > hi) break;
        r.c[size_t(e - r.lead)] += c[i] * o.c[j];
      }
    }
    return r;
  }
};

// Expansion of a single brick at t = -k, coefficients kept up to u^{hi}.
inline LaurentSeries brick_series(const Brick& br, long k, long hi) {
  LaurentSeries s;
  s.lead = 0;
  s.c = {Rational(1)};
  if (br.polynomial()) {
    for (long l = br.b; l < br.a; ++l) {
      long cst = l - k;
      if (cst == 0) {
        ++s.lead;  // factor u
        continue;
      }
      LaurentSeries f;
      f.lead = 0;
      f.c = {Rational(cst), Rational(1)};
      s = s.mul(f, hi);
    }
    Rational inv(1, factorial(br.a - br.b));
    for (auto& x : s.c) x *= inv;
    return s;
  }
  // pole brick: (b-a-1)! / prod (u + (l-k))
  long extra = 0;  // count of bare 1/u factors
  std::vector<long> consts;
  for (long l = br.a; l < br.b; ++l) {
    long cst = l - k;
    if (cst == 0) {
      ++extra;
    } else {
      consts.push_back(cst);
    }
  }
  s.lead = -extra;
  // geometric series for each 1/(c+u) = (1/c) sum (-u/c)^m
  for (long cst : consts) {
    long len = hi - (s.lead - 0) + 1;  // enough terms before final truncation
    LaurentSeries f;
    f.lead = 0;
    f.c.reserve(size_t(std::max<long>(len, 1)));
    // nb: two-arg Rational(p, q) mishandles negative q (unsigned path)
    Rational inv_c = Rational(1) / Rational(cst);
    Rational term = inv_c;
    for (long m = 0; m < std::max<long>(len, 1); ++m) {
      f.c.push_back(term);
      term *= -inv_c;
    }
    s = s.mul(f, hi);
  }
  Rational scale(factorial(br.b - br.a - 1));
  for (auto& x : s.c) x *= scale;
  return s;
}

struct LocalExpansion {
  long center = 0;  // expansion at t = -center
  LaurentSeries series;

  long pole_order() const { return series.lead < 0 ? -series.lead : 0; }
  Rational coefficient(long j) const { return series.coefficient(j); }
};

struct BrickProduct {
  std::vector<Brick> bricks;
  std::optional<long> prefactor_h0;  // represents the factor (h0 + 2t)
  Rational constant = Rational(1);

  long degree() const {
    long d = prefactor_h0 ? 1 : 0;
    for (const auto& br : bricks) d += br.degree();
    return d;
  }

  Rational eval(const Rational& t) const {
    if (is_integer(t)) {
      long k = -long(num(t).convert_to<long long>());
      LocalExpansion e = local_expansion(k, 0);
      if (e.series.lead < 0) throw BrickPole(-e.series.lead);
      return e.series.lead > 0 ? Rational(0) : e.series.c.at(0);
    }
    Rational r = constant;
    for (const auto& br : bricks) r *= brick_eval(br, t);
    if (prefactor_h0) r *= (Rational(*prefactor_h0) + 2 * t);
    return r;
  }

  // Order of -k as a zero (positive) or pole (negative) of one brick.
  static long brick_lead(const Brick& br, long k) {
    if (br.polynomial()) return (br.b <= k && k < br.a) ? 1 : 0;
    return (br.a <= k && k < br.b) ? -1 : 0;
  }

  // Exact Laurent expansion at t = -k with coefficients up to u^{order}.
  // Factors with poles push useful information above u^{order} in the
  // other factors, so truncation depths are set per factor.
  LocalExpansion local_expansion(long k, long order) const {
    long total_lead = prefactor_h0 && *prefactor_h0 == 2 * k ? 1 : 0;
    for (const auto& br : bricks) total_lead += brick_lead(br, k);

    LaurentSeries s;
    s.lead = 0;
    s.c = {constant};
    long remaining = total_lead;
    if (prefactor_h0) {
      long l = (*prefactor_h0 == 2 * k) ? 1 : 0;
      remaining -= l;
      LaurentSeries f;
      f.lead = 0;
      f.c = {Rational(*prefactor_h0 - 2 * k), Rational(2)};
      s = s.mul(f, order - remaining);
    }
    for (const auto& br : bricks) {
      long l = brick_lead(br, k);
      remaining -= l;
      s = s.mul(brick_series(br, k, order - total_lead + l), order - remaining);
    }
    s.normalize(order);
    return LocalExpansion{k, std::move(s)};
  }
};

// ---------------------------------------------------------------------------
// Right-hand sides of the interior valuation estimates.

inline long ifloor(long a, long p) {
  long q = a / p;
  if (a % p != 0 && a < 0) --q;
  return q;
}

// Polynomial brick, b0 <= b < a <= a0, k in [b0, a0), p > sqrt(a0-b0-1):
//   ord_p R^{(j)}(-k) >= -j + [(k-b)/p] - [(k-a)/p] - [(a-b)/p]
inline long poly_brick_ord_bound(long a, long b, long k, long p, long j) {
  return -j + ifloor(k - b, p) - ifloor(k - a, p) - ifloor(a - b, p);
}

// Pole brick, a0 <= a < b <= b0, k in [a0, b0), p > sqrt(b0-a0-1):
//   ord_p (R(t)(t+k))^{(j)} |_{t=-k} >= -j + [(b-a-1)/p] - [(k-a)/p] - [(b-1-k)/p]
inline long pole_brick_ord_bound(long a, long b, long k, long p, long j) {
  return -j + ifloor(b - a - 1, p) - ifloor(k - a, p) - ifloor(b - 1 - k, p);
}

inline long valuation_bound_interior(long a, long b, long a0, long b0, long k, long p,
                                     long j) {
  if (b0 <= b && b < a && a <= a0) {
    if (!(b0 <= k && k < a0)) throw std::invalid_argument("k outside [b0, a0)");
    if (p * p <= a0 - b0 - 1) throw std::invalid_argument("p too small: p^2 <= a0-b0-1");
    return poly_brick_ord_bound(a, b, k, p, j);
  }
  if (a0 <= a && a < b && b <= b0) {
    if (!(a0 <= k && k < b0)) throw std::invalid_argument("k outside [a0, b0)");
    if (p * p <= b0 - a0 - 1) throw std::invalid_argument("p too small: p^2 <= b0-a0-1");
    return pole_brick_ord_bound(a, b, k, p, j);
  }
  throw std::invalid_argument("parameter ordering violates b0<=b<a<=a0 or a0<=a<b<=b0");
}

}  // namespace zf
