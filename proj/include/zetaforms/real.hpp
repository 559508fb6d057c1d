#pragma once

// High-precision reals (MPFR-backed), a minimal complex companion type,
// and the two transcendental evaluators the library needs: the Hurwitz
// zeta function at integer exponent s >= 2 (Euler-Maclaurin with the
// remainder bounded by the first omitted term) and the digamma function
// (upward recurrence into the asymptotic regime).  Everything else in
// the library is exact rational arithmetic.

#include "zetaforms/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <vector>

namespace zf {

using Real = boost::multiprecision::mpfr_float;

// Scoped working-precision override, in decimal digits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
    if (digits > saved_) Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline void set_working_digits(unsigned digits) { Real::default_precision(digits + 10); }

inline Real to_real(const Int& x) { return Real(x); }

inline Real to_real(const Rational& x) { return Real(x); }

inline Real pow10(long e) {
  Real r = 1;
  Real ten = 10;
  long a = e < 0 ? -e : e;
  for (long i = 0; i < a; ++i) r *= ten;
  return e < 0 ? Real(1) / r : r;
}

// ---------------------------------------------------------------------------
// Complex numbers over Real.  Only what the saddle-point code needs.

struct CReal {
  Real re, im;

  CReal() : re(0), im(0) {}
  CReal(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  CReal(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  CReal operator-() const { return {-re, -im}; }
  CReal operator+(const CReal& o) const { return {re + o.re, im + o.im}; }
  CReal operator-(const CReal& o) const { return {re - o.re, im - o.im}; }
  CReal operator*(const CReal& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CReal operator/(const CReal& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  CReal& operator+=(const CReal& o) { return *this = *this + o; }
  CReal& operator-=(const CReal& o) { return *this = *this - o; }
  CReal& operator*=(const CReal& o) { return *this = *this * o; }
  CReal& operator/=(const CReal& o) { return *this = *this / o; }
};

inline Real abs(const CReal& z) {
  return sqrt(z.re * z.re + z.im * z.im);
}

// Principal branch: Im(log z) = atan2(im, re) in (-pi, pi].
inline CReal log(const CReal& z) {
  return {log(z.re * z.re + z.im * z.im) / 2, atan2(z.im, z.re)};
}

// ---------------------------------------------------------------------------
// Exact Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2), cached.

inline const Rational& bernoulli(size_t m) {
  thread_local std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  while (cache.size() <= m) {
    size_t n = cache.size();
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    Rational s = 0;
    for (size_t k = 0; k < n; ++k) s += Rational(binomial(long(n) + 1, long(k))) * cache[k];
    cache.push_back(-s / Rational(long(n) + 1));
  }
  return cache[m];
}

// ---------------------------------------------------------------------------
// Hurwitz zeta(s, a) = sum_{k>=0} (a+k)^{-s}, integer s >= 2, a > 0.
//
// Euler-Maclaurin at shift point N = a + M:
//   zeta(s,a) = sum_{k<M} (a+k)^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//             + sum_{j>=1} B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}.
// f(x) = (a+x)^{-s} is completely monotone, so the truncation error is
// bounded by the first omitted correction term.

inline Real hurwitz_zeta(int s, const Real& a, unsigned digits) {
  if (s < 2) throw std::domain_error("hurwitz_zeta requires s >= 2");
  if (a <= 0) throw std::domain_error("hurwitz_zeta requires a > 0");
  PrecisionGuard guard(digits + 12);
  Real eps = pow10(-long(digits) - 2);

  long m = 16;
  for (int attempt = 0; attempt < 20; ++attempt, m *= 2) {
    Real head = 0;
    for (long k = 0; k < m; ++k) head += pow(a + k, -s);
    Real n = a + m;
    Real v = head + pow(n, 1 - s) / (s - 1) + pow(n, -s) / 2;
    Real nsq = n * n;
    Real t = pow(n, 1 - s);            // carries N^{1-s-2j} progressively
    Rational rising(Int(s), 2);        // (s)_{2j-1} / (2j)!, exact
    bool ok = false;
    Real prev = 0;
    for (long j = 1; j < 400; ++j) {
      t /= nsq;
      // term_j = B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
      Real term = to_real(bernoulli(2 * j) * rising) * t;
      if (abs(term) < eps) {
        v += term;
        ok = true;
        break;
      }
      if (j > 2 && abs(term) > abs(prev)) break;  // diverging: need larger N
      v += term;
      prev = term;
      rising *= Rational(Int(s + 2 * j - 1) * Int(s + 2 * j),
                         Int(2 * j + 1) * Int(2 * j + 2));
    }
    if (ok) return v;
  }
  throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not certify");
}

inline Real hurwitz_zeta(int s, const Rational& a, unsigned digits) {
  PrecisionGuard guard(digits + 12);
  return hurwitz_zeta(s, to_real(a), digits);
}

// zeta(s) for integer s >= 2, |error| < 10^-digits.
inline Real zeta_int(int s, unsigned digits) {
  if (s < 2) throw std::domain_error("zeta_int requires s >= 2");
  return hurwitz_zeta(s, Real(1), digits);
}

// ---------------------------------------------------------------------------
// digamma(x) for x > 0, |error| < 10^-digits.  Recurrence
// psi(x) = psi(x+1) - 1/x pushes the argument up to X, then
//   psi(X) = ln X - 1/(2X) - sum_j B_{2j}/(2j X^{2j}),
// truncation error bounded by the first omitted term (x real positive).

inline Real digamma(const Real& x, unsigned digits) {
  if (x <= 0) throw std::domain_error("digamma requires x > 0");
  PrecisionGuard guard(digits + 12);
  Real eps = pow10(-long(digits) - 2);

  long shift0 = long(digits) / 2 + 8;
  for (int attempt = 0; attempt < 20; ++attempt, shift0 *= 2) {
    Real acc = 0;
    Real y = x;
    while (y < shift0) {
      acc -= 1 / y;
      y += 1;
    }
    Real v = acc + log(y) - 1 / (2 * y);
    Real ysq = y * y;
    Real t = 1;
    bool ok = false;
    Real prev = 0;
    for (long j = 1; j < 400; ++j) {
      t /= ysq;
      Real term = to_real(bernoulli(2 * j) / Rational(2 * j)) * t;
      if (abs(term) < eps) {
        v -= term;
        ok = true;
        break;
      }
      if (j > 2 && abs(term) > abs(prev)) break;
      v -= term;
      prev = term;
    }
    if (ok) return v;
  }
  throw std::runtime_error("digamma: asymptotic series did not certify");
}

inline Real digamma(const Rational& x, unsigned digits) {
  PrecisionGuard guard(digits + 12);
  return digamma(to_real(x), digits);
}

}  // namespace zf
