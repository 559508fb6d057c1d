#pragma once

// Linear forms in 1 and zeta(3) (resp. zeta(2)) built from integer
// parameter sets: exact partial-fraction coefficients, assembly of the
// form, denominator-clearing reports, the h <-> (a,b) parameter maps,
// and numeric verification of the Bailey and Whipple identities.

#include "zetaforms/bricks.hpp"
#include "zetaforms/hyperseries.hpp"
#include "zetaforms/linear_form.hpp"
#include "zetaforms/primes.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace zf {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int lcm_or_one(long n) { return n >= 1 ? lcm_upto(n) : Int(1); }

// ---------------------------------------------------------------------------
// Parameter sets

struct ParamSet33 {
  std::array<long, 4> a{}, b{};

  struct Ordered {
    long b1, b2, a1, a2, a3, a4, b3, b4;
  };

  Ordered ordered() const {
    std::array<long, 4> as = a;
    std::sort(as.begin(), as.end());
    long b1 = std::min(b[0], b[1]), b2 = std::max(b[0], b[1]);
    long b3 = std::min(b[2], b[3]), b4 = std::max(b[2], b[3]);
    return {b1, b2, as[0], as[1], as[2], as[3], b3, b4};
  }

  long sum_a() const { return a[0] + a[1] + a[2] + a[3]; }
  long sum_b() const { return b[0] + b[1] + b[2] + b[3]; }

  void validate() const {
    auto o = ordered();
    if (!(o.b2 <= o.a1))
      throw InvalidParams("ordering violated: max{b1,b2} <= min{a1..a4} fails");
    if (!(o.a4 < o.b3))
      throw InvalidParams("ordering violated: max{a1..a4} < min{b3,b4} fails");
    if (!(sum_a() <= sum_b() - 2))
      throw InvalidParams("decay condition violated: sum(a) <= sum(b) - 2 fails");
  }

  bool balanced() const { return sum_a() == sum_b() - 2; }
};

struct ParamSet32 {
  std::array<long, 3> a{}, b{};

  struct Ordered {
    long b1, a1, a2, a3, b2, b3;
  };

  Ordered ordered() const {
    std::array<long, 3> as = a;
    std::sort(as.begin(), as.end());
    return {b[0], as[0], as[1], as[2], std::min(b[1], b[2]), std::max(b[1], b[2])};
  }

  long sum_a() const { return a[0] + a[1] + a[2]; }
  long sum_b() const { return b[0] + b[1] + b[2]; }

  void validate() const {
    auto o = ordered();
    if (!(o.b1 <= o.a1))
      throw InvalidParams("ordering violated: b1 <= min{a1..a3} fails");
    if (!(o.a3 < o.b2))
      throw InvalidParams("ordering violated: max{a1..a3} < min{b2,b3} fails");
    if (!(sum_a() <= sum_b() - 2))
      throw InvalidParams("decay condition violated: sum(a) <= sum(b) - 2 fails");
  }
};

inline BrickProduct rational_function_z3(const ParamSet33& p) {
  p.validate();
  return BrickProduct{{Brick{p.a[0], p.b[0]}, Brick{p.a[1], p.b[1]}, Brick{p.a[2], p.b[2]},
                       Brick{p.a[3], p.b[3]}},
                      std::nullopt,
                      Rational(1)};
}

inline BrickProduct rational_function_z2(const ParamSet32& p) {
  p.validate();
  return BrickProduct{{Brick{p.a[0], p.b[0]}, Brick{p.a[1], p.b[1]}, Brick{p.a[2], p.b[2]}},
                      std::nullopt,
                      Rational(1)};
}

// ---------------------------------------------------------------------------
// Partial fractions  R(t) = sum_k A_k/(t+k)^2 + sum_k B_k/(t+k)

struct PartialFractions {
  long lo = 0, hi = -1;  // scanned k range, inclusive
  std::vector<Rational> A, B;

  Rational A_at(long k) const {
    return (k < lo || k > hi) ? Rational(0) : A[size_t(k - lo)];
  }
  Rational B_at(long k) const {
    return (k < lo || k > hi) ? Rational(0) : B[size_t(k - lo)];
  }
  Rational sum_B() const {
    Rational s = 0;
    for (const auto& x : B) s += x;
    return s;
  }
};

inline PartialFractions extract_partial_fractions(const BrickProduct& r, long lo, long hi) {
  PartialFractions pf;
  pf.lo = lo;
  pf.hi = hi;
  for (long k = lo; k <= hi; ++k) {
    auto e = r.local_expansion(k, 0);
    if (e.pole_order() > 2)
      throw std::logic_error("unexpected pole order > 2 in quadratic partial fractions");
    pf.A.push_back(e.coefficient(-2));
    pf.B.push_back(e.coefficient(-1));
  }
  if (pf.sum_B() != 0)
    throw std::logic_error("residue sum at infinity does not vanish; parameters invalid");
  return pf;
}

inline PartialFractions partial_fractions_z3(const ParamSet33& p) {
  auto o = p.ordered();
  auto pf = extract_partial_fractions(rational_function_z3(p), o.a3, o.b4 - 1);
  for (long k = pf.lo; k <= pf.hi; ++k)
    if ((k < o.a4 || k >= o.b3) && pf.A_at(k) != 0)
      throw std::logic_error("double pole outside the expected window");
  return pf;
}

inline PartialFractions partial_fractions_z2(const ParamSet32& p) {
  auto o = p.ordered();
  return extract_partial_fractions(rational_function_z2(p), o.a1, o.b3 - 1);
}

// ---------------------------------------------------------------------------
// Form assembly

struct FormZ3 {
  ParamSet33 p;
  PartialFractions pf;
  Int A;       // G = 2 A zeta(3) - B
  Rational B;
  LinearForm form;
};

inline FormZ3 build_form_z3(const ParamSet33& p) {
  auto o = p.ordered();
  auto pf = partial_fractions_z3(p);
  int sign = ((p.b[0] + p.b[1]) % 2 == 0) ? 1 : -1;
  Rational a_sum = 0, b_sum = 0;
  for (long k = pf.lo; k <= pf.hi; ++k) {
    a_sum += pf.A_at(k);
    b_sum += 2 * pf.A_at(k) * harmonic(k - o.a1, 3) + pf.B_at(k) * harmonic(k - o.a1, 2);
  }
  a_sum *= sign;
  b_sum *= sign;
  if (!is_integer(a_sum)) throw std::logic_error("zeta(3) coefficient is not integral");
  FormZ3 f;
  f.p = p;
  f.pf = std::move(pf);
  f.A = num(a_sum);
  f.B = b_sum;
  f.form.set(3, 2 * a_sum);
  f.form.set(0, -b_sum);
  return f;
}

inline LinearForm linear_form_z3(const ParamSet33& p) { return build_form_z3(p).form; }

struct FormZ2 {
  ParamSet32 p;
  PartialFractions pf;
  Int A;  // G = A zeta(2) - B
  Rational B;
  LinearForm form;
};

inline FormZ2 build_form_z2(const ParamSet32& p) {
  auto o = p.ordered();
  auto pf = partial_fractions_z2(p);
  Rational a_sum = 0, b_sum = 0;
  for (long k = pf.lo; k <= pf.hi; ++k) {
    a_sum += pf.A_at(k);
    b_sum += pf.A_at(k) * harmonic(k - o.a1, 2) + pf.B_at(k) * harmonic(k - o.a1, 1);
  }
  if (!is_integer(a_sum)) throw std::logic_error("zeta(2) coefficient is not integral");
  FormZ2 f;
  f.p = p;
  f.pf = std::move(pf);
  f.A = num(a_sum);
  f.B = b_sum;
  f.form.set(2, a_sum);
  f.form.set(0, -b_sum);
  return f;
}

inline LinearForm linear_form_z2(const ParamSet32& p) { return build_form_z2(p).form; }

// ---------------------------------------------------------------------------
// Denominator-clearing reports

struct IntegralityReport {
  bool a_integral = false;
  bool b_cleared = false;
  long m1 = 0, m2 = 0;  // multiplier = D_{m1}^2 * D_{m2} (z3), D_{m1} * D_{m2} (z2)
  Int multiplier = 1;
  Int b_denominator = 1;
  bool ok() const { return a_integral && b_cleared; }
};

inline IntegralityReport check_integrality_z3(const FormZ3& f) {
  auto o = f.p.ordered();
  IntegralityReport r;
  r.m1 = o.b4 - o.a1 - 1;
  r.m2 = std::max({f.p.a[0] - f.p.b[0], f.p.a[1] - f.p.b[1], o.b4 - f.p.a[2] - 1,
                   o.b4 - f.p.a[3] - 1, o.b3 - o.a1 - 1});
  Int d1 = lcm_or_one(r.m1);
  r.multiplier = d1 * d1 * lcm_or_one(r.m2);
  r.a_integral = true;  // integral by construction of FormZ3
  r.b_denominator = den(f.B);
  r.b_cleared = is_integer(f.B * Rational(r.multiplier));
  return r;
}

inline IntegralityReport check_integrality_z2(const FormZ2& f) {
  auto o = f.p.ordered();
  IntegralityReport r;
  r.m1 = o.b3 - o.a1 - 1;
  r.m2 = std::max({f.p.a[0] - f.p.b[0], o.b3 - f.p.a[1] - 1, o.b3 - f.p.a[2] - 1,
                   o.b2 - o.a1 - 1});
  r.multiplier = lcm_or_one(r.m1) * lcm_or_one(r.m2);
  r.a_integral = true;
  r.b_denominator = den(f.B);
  r.b_cleared = is_integer(f.B * Rational(r.multiplier));
  return r;
}

// ---------------------------------------------------------------------------
// Well-poised parameter maps (b1 = 1 normalization)

struct HParams6 {
  long h0 = 0;
  std::array<long, 5> h{};

  void validate() const {
    for (long hj : h)
      if (!(1 + h0 > 2 * hj) || hj < 1)
        throw InvalidParams("well-poised condition violated: 1 + h0 > 2 h_j fails");
  }
};

inline HParams6 h_from_ab(const ParamSet33& p) {
  if (!p.balanced())
    throw InvalidParams("balance condition violated: sum(a) = sum(b) - 2 fails");
  HParams6 h;
  h.h0 = p.b[2] + p.b[3] - p.b[0] - p.a[0];
  h.h = {1 - p.b[0] + p.a[1], 1 - p.b[0] + p.a[2], 1 - p.b[0] + p.a[3], p.b[3] - p.a[0],
         p.b[2] - p.a[0]};
  h.validate();
  return h;
}

inline ParamSet33 ab_from_h(const HParams6& h) {
  ParamSet33 p;
  p.a = {1 + h.h0 - h.h[3] - h.h[4], h.h[0], h.h[1], h.h[2]};
  p.b = {1, h.h[0] + h.h[1] + h.h[2] - h.h0, 1 + h.h0 - h.h[3], 1 + h.h0 - h.h[4]};
  return p;
}

// shift all parameters so that b1 = 1 (the quantity G is shift-covariant
// only through the index windows; the normalized set is the group's
// canonical representative)
inline ParamSet33 normalize_b1(const ParamSet33& p) {
  ParamSet33 q = p;
  long s = 1 - p.b[0];
  for (auto& x : q.a) x += s;
  for (auto& x : q.b) x += s;
  return q;
}

// ---------------------------------------------------------------------------
// Numeric value by direct summation: exact partial sum of the series
// plus the Hurwitz-zeta tail of its partial-fraction expansion.

inline Real series_value_z3(const ParamSet33& p, unsigned digits) {
  auto o = p.ordered();
  auto r = rational_function_z3(p);
  auto pf = partial_fractions_z3(p);
  long t0 = 1 - o.a1;
  long T = std::max({t0, 1 - o.a3 + 1, 2L}) + 8;
  PrecisionGuard guard(digits + 20);
  Rational partial = 0;
  for (long t = t0; t < T; ++t) partial += r.local_expansion(-t, 1).coefficient(1);
  Real tail = 0;
  for (long k = pf.lo; k <= pf.hi; ++k) {
    if (pf.A_at(k) != 0)
      tail += -2 * to_real(pf.A_at(k)) * hurwitz_zeta(3, Rational(T + k), digits + 10);
    if (pf.B_at(k) != 0)
      tail += -to_real(pf.B_at(k)) * hurwitz_zeta(2, Rational(T + k), digits + 10);
  }
  int sign = ((p.b[0] + p.b[1]) % 2 == 0) ? 1 : -1;
  return -sign * (to_real(partial) + tail);
}

inline Real series_value_z2(const ParamSet32& p, unsigned digits) {
  auto o = p.ordered();
  auto r = rational_function_z2(p);
  auto pf = partial_fractions_z2(p);
  long t0 = 1 - o.a1;
  long T = std::max({t0, 1 - o.a1 + 1, 2L}) + 8;
  PrecisionGuard guard(digits + 20);
  Rational partial = 0;
  for (long t = t0; t < T; ++t) partial += r.eval(Rational(t));
  Rational b_tail = 0;
  Real tail = 0;
  for (long k = pf.lo; k <= pf.hi; ++k) {
    if (pf.A_at(k) != 0)
      tail += to_real(pf.A_at(k)) * hurwitz_zeta(2, Rational(T + k), digits + 10);
    b_tail -= pf.B_at(k) * harmonic(T + k - 1, 1);  // sum B_k = 0 makes this exact
  }
  return to_real(partial) + tail + to_real(b_tail);
}

// ---------------------------------------------------------------------------
// Bailey's identity (zeta(3) side) and Whipple's identity (zeta(2) side),
// both verified numerically: exact-form route on the left, direct
// well-poised series summation on the right.

struct IdentityCheck {
  Real lhs, rhs, residual;
  bool ok(unsigned digits) const { return residual < pow10(-long(digits)); }
};

// series sum_t R~(h; t) from t = 0 for the 7F6-side of Bailey
inline HyperTerm wellpoised_term_z3(const HParams6& h) {
  HyperTerm term;
  term.pref_h0 = h.h0;
  for (long o = 1; o <= h.h0 - 1; ++o) term.num.push_back(o);
  for (long hj : h.h)
    for (long o = hj; o <= h.h0 - hj; ++o) term.den.push_back(o);
  return term;
}

inline IdentityCheck verify_bailey(const ParamSet33& p, unsigned digits) {
  p.validate();
  HParams6 h = h_from_ab(p);
  FormZ3 f = build_form_z3(p);

  // left side: G~ / (prod (a_j - b_1)! prod (a_j - b_2)!)
  Rational lhs_scale =
      Rational(factorial(p.a[0] - p.b[0]) * factorial(p.a[1] - p.b[1])) /
      Rational(factorial(p.b[2] - p.a[2] - 1) * factorial(p.b[3] - p.a[3] - 1));
  for (long j = 0; j < 4; ++j) {
    lhs_scale /= Rational(factorial(p.a[j] - p.b[0]));
    lhs_scale /= Rational(factorial(p.a[j] - p.b[1]));
  }
  long mag = long(num(lhs_scale).str().size() + den(lhs_scale).str().size());
  Real lhs = f.form.value(digits + unsigned(mag) + 8) * to_real(lhs_scale);

  // right side: F~(h) / (prod (h_j - 1)! * (1 + 2 h_0 - sum h_j)!)
  long g = 1 + 2 * h.h0 - (h.h[0] + h.h[1] + h.h[2] + h.h[3] + h.h[4]);
  if (g < 0) throw InvalidParams("well-poised series parameter (1+2h0-sum h) negative");
  Rational rhs_scale = Rational(1, factorial(g));
  for (long hj : h.h) rhs_scale /= Rational(factorial(hj - 1));
  HyperTerm term = wellpoised_term_z3(h);
  term.scalar = rhs_scale;
  Real rhs = hyperseries_sum(term, 0, digits + 1);

  return {lhs, rhs, abs(lhs - rhs)};
}

inline IdentityCheck verify_whipple(const ParamSet32& p_in, unsigned digits) {
  p_in.validate();
  // the h-map and the Gamma prefactors assume the b1 = 1 normalization;
  // G itself is invariant under the shift
  ParamSet32 p = p_in;
  long shift = 1 - p.b[0];
  for (auto& x : p.a) x += shift;
  for (auto& x : p.b) x += shift;
  FormZ2 f = build_form_z2(p);
  long h0 = p.b[1] + p.b[2] - 1 - p.a[0];
  std::array<long, 4> h = {p.a[1], p.a[2], p.b[2] - p.a[0], p.b[1] - p.a[0]};
  for (long hj : h)
    if (2 * hj > h0)
      throw InvalidParams("Whipple series divergent: 2 h_j <= h0 fails");

  // left side: G~ / (Gamma(a1) Gamma(a2) Gamma(a3) Gamma(b2+b3-a1-a2-a3))
  Rational lhs_scale =
      Rational(factorial(p.a[0] - p.b[0])) /
      Rational(factorial(p.b[1] - p.a[1] - 1) * factorial(p.b[2] - p.a[2] - 1));
  lhs_scale /= Rational(factorial(p.a[0] - 1) * factorial(p.a[1] - 1) * factorial(p.a[2] - 1) *
                        factorial(p.b[1] + p.b[2] - p.sum_a() - 1));
  long mag = long(num(lhs_scale).str().size() + den(lhs_scale).str().size());
  Real lhs = f.form.value(digits + unsigned(mag) + 8) * to_real(lhs_scale);

  // right side: alternating well-poised 6F5(-1) series over (h_j - 1)!
  HyperTerm term;
  term.alternating = true;
  term.pref_h0 = h0;
  for (long o = 1; o <= h0 - 1; ++o) term.num.push_back(o);
  for (long hj : h)
    for (long o = hj; o <= h0 - hj; ++o) term.den.push_back(o);
  Rational rhs_scale = 1;
  for (long hj : h) rhs_scale /= Rational(factorial(hj - 1));
  term.scalar = rhs_scale;
  Real rhs = hyperseries_sum(term, 0, digits + 1);

  return {lhs, rhs, abs(lhs - rhs)};
}

}  // namespace zf
