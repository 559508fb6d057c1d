#pragma once

// Exact integer and rational scalars used throughout the library.
// Backed by GMP through Boost.Multiprecision; mpq keeps rationals in
// canonical form (reduced, positive denominator) automatically.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zf {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& x) { return numerator(x); }
inline Int den(const Rational& x) { return denominator(x); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

// floor(a/b) for integers, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rational& x) { return floor_div(num(x), den(x)); }

// fractional part in [0,1)
inline Rational frac_part(const Rational& x) { return x - Rational(floor_rat(x)); }

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// p-adic valuation of a nonzero integer.
inline long ord_p(Int x, const Int& p) {
  if (x == 0) throw std::domain_error("ord_p undefined at 0");
  if (x < 0) x = -x;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// p-adic valuation of a nonzero rational.
inline long ord_p(const Rational& x, const Int& p) {
  if (x == 0) throw std::domain_error("ord_p undefined at 0");
  return ord_p(num(x), p) - ord_p(den(x), p);
}

// Partial sum H^{(s)}_m = sum_{l=1}^m 1/l^s, exact.
inline Rational harmonic(long m, int s) {
  Rational h = 0;
  for (long l = 1; l <= m; ++l) {
    Int ls = 1;
    for (int i = 0; i < s; ++i) ls *= l;
    h += Rational(1, ls);
  }
  return h;
}

inline std::string to_string(const Rational& x) {
  std::string s = num(x).str();
  if (den(x) != 1) s += "/" + den(x).str();
  return s;
}

}  // namespace zf
