#pragma once

// Well-poised linear forms in 1 and odd zeta values: exact coefficient
// extraction with the symmetry vanishing, the arithmetic factor Phi,
// the two-variable step function phi_0 and its minimum phi, complex
// saddle asymptotics, the F_{k,n} family, and the contiguous-set
// conjecture checker.

#include "zetaforms/bricks.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/roots.hpp"
#include "zetaforms/step_function.hpp"

#include <cmath>
#include <random>
#include <set>
#include <vector>

namespace zf {

struct WellPoisedParams {
  long r = 1, q = 5;
  long h0 = 0;
  std::vector<long> h;  // h_1..h_q, input order is meaningful

  void validate() const {
    if (r < 1 || r % 2 == 0 || q % 2 == 0)
      throw InvalidParams("r and q must be positive odd integers");
    if (q < r + 4) throw InvalidParams("q >= r + 4 fails");
    if (long(h.size()) != q) throw InvalidParams("expected q parameters h_1..h_q");
    long sum = 0;
    for (long hj : h) {
      if (hj < 1) throw InvalidParams("h_j >= 1 fails");
      if (2 * hj > h0) throw InvalidParams("well-poised bound 2 h_j <= h0 fails");
      sum += hj;
    }
    if (2 * sum > h0 * (q - r))
      throw InvalidParams("decay condition sum(h_j) <= h0 (q-r)/2 fails");
  }

  std::vector<long> sorted_h() const {
    std::vector<long> s = h;
    std::sort(s.begin(), s.end());
    return s;
  }

  long h_min() const { return *std::min_element(h.begin(), h.end()); }
  long pole_h_min() const { return *std::min_element(h.begin() + r, h.end()); }
};

// product of bricks realizing the well-poised rational function, with
// the (h0 + 2t) prefactor; the first r parameters take the doubled role
inline BrickProduct odd_rational_function(const WellPoisedParams& p) {
  p.validate();
  BrickProduct prod;
  prod.prefactor_h0 = p.h0;
  for (long j = 0; j < p.r; ++j) {
    prod.bricks.push_back(Brick{p.h[size_t(j)], 1});
    prod.bricks.push_back(Brick{p.h0, 1 + p.h0 - p.h[size_t(j)]});
  }
  for (long j = p.r; j < p.q; ++j)
    prod.bricks.push_back(Brick{p.h[size_t(j)], 1 + p.h0 - p.h[size_t(j)]});
  if (prod.degree() > -2)
    throw InvalidParams("rational function does not decay like O(t^-2)");
  return prod;
}

// ---------------------------------------------------------------------------
// Coefficient extraction

struct OddForm {
  WellPoisedParams p;
  LinearForm form;
  long k_lo = 0, k_hi = -1;
  std::vector<std::vector<Rational>> B;  // B[j - r - 1][k - k_lo] = B_{jk}

  Rational B_at(long j, long k) const {
    if (j <= p.r || j > p.q || k < k_lo || k > k_hi) return Rational(0);
    return B[size_t(j - p.r - 1)][size_t(k - k_lo)];
  }
};

inline OddForm build_form_odd(const WellPoisedParams& p) {
  BrickProduct rf = odd_rational_function(p);
  OddForm f;
  f.p = p;
  f.k_lo = p.pole_h_min();
  f.k_hi = p.h0 - f.k_lo;
  f.B.assign(size_t(p.q - p.r), {});
  for (long k = f.k_lo; k <= f.k_hi; ++k) {
    auto e = rf.local_expansion(k, 0);
    if (e.pole_order() > p.q - p.r)
      throw std::logic_error("pole order exceeds q - r");
    for (long j = p.r + 1; j <= p.q; ++j)
      f.B[size_t(j - p.r - 1)].push_back(e.coefficient(p.r - j));
  }
  // symmetry of the well-poised function: B_{jk} = (-1)^j B_{j, h0-k}
  for (long j = p.r + 1; j <= p.q; ++j)
    for (long k = f.k_lo; k <= f.k_hi; ++k) {
      Rational rhs = f.B_at(j, p.h0 - k);
      if (j % 2 != 0) rhs = -rhs;
      if (f.B_at(j, k) != rhs)
        throw std::logic_error("well-poised symmetry of B_{jk} violated");
    }

  long t0 = 1 - p.h_min();
  Rational a0 = 0;
  for (long j = p.r + 1; j <= p.q; ++j) {
    Rational bin(binomial(j - 2, p.r - 1));
    Rational aj = 0;
    for (long k = f.k_lo; k <= f.k_hi; ++k) {
      Rational b = f.B_at(j, k);
      if (b == 0) continue;
      aj += b;
      a0 += bin * b * harmonic(k + t0 - 1, int(j - 1));
    }
    aj *= bin;
    if (j == p.r + 1) {
      if (aj != 0) throw std::logic_error("zeta(r) coefficient fails to vanish");
      continue;
    }
    if (j % 2 != 0) {
      if (aj != 0) throw std::logic_error("odd-index coefficient fails to vanish");
      continue;
    }
    f.form.set(int(j - 1), aj);
  }
  f.form.set(0, -a0);
  return f;
}

inline LinearForm linear_form_odd(const WellPoisedParams& p) { return build_form_odd(p).form; }

// F~ : the normalization-free quantity, stable under permutations of h
inline LinearForm normalized_form_odd(const WellPoisedParams& p) {
  OddForm f = build_form_odd(p);
  Rational scale = 1;
  for (long j = 0; j < p.r; ++j) {
    Rational fj(factorial(p.h[size_t(j)] - 1));
    scale *= fj * fj;
  }
  for (long j = p.r; j < p.q; ++j)
    scale /= Rational(factorial(p.h0 - 2 * p.h[size_t(j)]));
  return f.form.scaled(scale);
}

// the F_{k,n} family: r = 1, q = k + 2, h0 = 3n + 2, h_j = n + 1
inline WellPoisedParams fkn_params(long k, long n) {
  if (k < 3 || k % 2 == 0) throw InvalidParams("k must be odd and >= 3");
  WellPoisedParams p;
  p.r = 1;
  p.q = k + 2;
  p.h0 = 3 * n + 2;
  p.h.assign(size_t(p.q), n + 1);
  return p;
}

inline LinearForm f_kn(long k, long n) { return linear_form_odd(fkn_params(k, n)); }

// direct-summation value of the form, |error| < 10^-digits
inline Real series_value_odd(const OddForm& f, unsigned digits) {
  const auto& p = f.p;
  BrickProduct rf = odd_rational_function(p);
  long t0 = 1 - p.h_min();
  long T = std::max(t0, 1 - f.k_lo) + 8;
  // the B_{jk} can be astronomically large; pad the working precision
  // by their magnitude so the final cancellation leaves digits intact
  size_t mag = 0;
  for (const auto& row : f.B)
    for (const auto& b : row)
      if (b != 0) mag = std::max(mag, num(b).str().size() + den(b).str().size());
  digits += unsigned(mag);
  PrecisionGuard guard(digits + 20);
  Rational partial = 0;
  for (long t = t0; t < T; ++t)
    partial += rf.local_expansion(-t, int(p.r - 1)).coefficient(p.r - 1);
  Real tail = 0;
  Rational harmonic_tail = 0;
  for (long j = p.r + 1; j <= p.q; ++j) {
    Rational bin(binomial(j - 2, p.r - 1));
    for (long k = f.k_lo; k <= f.k_hi; ++k) {
      Rational b = f.B_at(j, k);
      if (b == 0) continue;
      if (j - 1 >= 2)
        tail += to_real(bin * b) * hurwitz_zeta(int(j - 1), Rational(T + k), digits + 10);
      else
        harmonic_tail -= bin * b * harmonic(T + k - 1, 1);  // sum_k B_jk = 0
    }
  }
  return to_real(partial) + tail + to_real(harmonic_tail);
}

// log |F_{k,n}| / n via log-domain summation (all terms positive)
inline double asymptotic_slope(long k, long n) {
  if (k < 3 || k % 2 == 0) throw InvalidParams("k must be odd and >= 3");
  auto lg = [](double x) { return std::lgamma(x); };
  double peak = -1e300;
  std::vector<double> logs;
  for (long t = n + 1;; ++t) {
    double lt = std::log(2.0) + (k - 1) * lg(double(n + 1)) + std::log(double(t) + n / 2.0);
    lt += lg(double(t)) - lg(double(t - n));            // (t-1)...(t-n)
    lt += lg(double(t + 2 * n + 1)) - lg(double(t + n + 1));  // (t+n+1)...(t+2n)
    lt -= (k + 1) * (lg(double(t + n + 1)) - lg(double(t)));  // [t...(t+n)]^{k+1}
    logs.push_back(lt);
    peak = std::max(peak, lt);
    if (lt < peak - 60 && t > 3 * n) break;
  }
  double sum = 0;
  for (double lt : logs) sum += std::exp(lt - peak);
  return (peak + std::log(sum)) / double(n);
}

// ---------------------------------------------------------------------------
// Arithmetic factor Phi(h) and the Lemma-style inclusion

// the displayed exponent nu_{k,p}; h taken in ascending order
inline long nu_kp_odd(long r, long q, long h0, const std::vector<long>& hs, long k, long p) {
  long v = 0;
  for (long j = 0; j < r; ++j) {
    long hj = hs[size_t(j)];
    v += ifloor(k - 1, p) + ifloor(h0 - k - 1, p) - ifloor(k - hj, p) -
         ifloor(h0 - hj - k, p) - 2 * ifloor(hj - 1, p);
  }
  for (long j = r; j < q; ++j) {
    long hj = hs[size_t(j)];
    v += ifloor(h0 - 2 * hj, p) - ifloor(k - hj, p) - ifloor(h0 - hj - k, p);
  }
  return v;
}

struct OddArith {
  long m0 = 0;
  std::vector<long> m;                    // m_1..m_{q-r}
  std::vector<std::pair<long, long>> nu;  // (p, nu_p), sqrt(h0) < p <= m_{q-r}
  Int phi = 1;
};

inline OddArith phi_arith(const WellPoisedParams& p) {
  p.validate();
  std::vector<long> hs = p.sorted_h();
  OddArith a;
  a.m0 = std::max(hs[size_t(p.r - 1)] - 1, p.h0 - 2 * hs[size_t(p.r)]);
  for (long j = 1; j <= p.q - p.r; ++j)
    a.m.push_back(std::max(a.m0, p.h0 - hs[0] - hs[size_t(p.r + j - 1)]));
  long k_lo = hs[size_t(p.r)], k_hi = p.h0 - k_lo;
  for (long prime : prime_table().upto(a.m.back())) {
    if (prime * prime <= p.h0) continue;
    long best = nu_kp_odd(p.r, p.q, p.h0, hs, k_lo, prime);
    for (long k = k_lo + 1; k <= k_hi && best > 0; ++k)
      best = std::min(best, nu_kp_odd(p.r, p.q, p.h0, hs, k, prime));
    if (best < 0) best = 0;  // the correction only collects guaranteed cancellation
    a.nu.push_back({prime, best});
    for (long i = 0; i < best; ++i) a.phi *= prime;
  }
  return a;
}

struct OddInclusion {
  bool ok = false;
  Int multiplier = 1;
  Int phi = 1;
  long failing_s = -1;
};

// D_{m1}^r D_{m2} ... D_{m_{q-r}} Phi^{-1} F(h) in Z zeta(q-2) + ... + Z
inline OddInclusion check_lemma19(const WellPoisedParams& p) {
  WellPoisedParams sorted = p;
  std::sort(sorted.h.begin(), sorted.h.end());
  OddForm f = build_form_odd(sorted);
  OddArith a = phi_arith(sorted);
  OddInclusion r;
  r.phi = a.phi;
  Int d1 = lcm_or_one(a.m[0]);
  for (long i = 0; i < p.r; ++i) r.multiplier *= d1;
  for (size_t i = 1; i < a.m.size(); ++i) r.multiplier *= lcm_or_one(a.m[i]);
  Rational scale = Rational(r.multiplier) / Rational(r.phi);
  r.ok = true;
  for (const auto& [s, c] : f.form.coeff)
    if (!is_integer(c * scale)) {
      r.ok = false;
      r.failing_s = s;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Section-9 normalization and the conjecture with one fewer D factor

// F under the contiguous-set normalization (Eq.-9.2 pairing)
inline LinearForm contiguous_form_odd(const WellPoisedParams& p) {
  LinearForm ft = normalized_form_odd(p);
  Rational scale = 1;
  for (long j = p.r + 1; j <= p.q; ++j)
    scale *= Rational(factorial(p.h0 - p.h[size_t(j - p.r - 1)] - p.h[size_t(j - 1)]));
  for (long j = 1; j <= p.r; ++j) scale /= Rational(factorial(p.h[size_t(j - 1)] - 1));
  for (long j = p.q - p.r + 1; j <= p.q; ++j)
    scale /= Rational(factorial(p.h[size_t(j - 1)] - 1));
  return ft.scaled(scale);
}

struct ConjectureResult {
  bool ok = false;
  long failing_prime = -1;
  Int multiplier = 1;
  std::vector<long> maxima;  // m_1 >= m_2 >= ... (q - r - 1 of them)
};

inline ConjectureResult conjecture_check(const WellPoisedParams& p_in) {
  WellPoisedParams p = p_in;
  std::sort(p.h.begin(), p.h.end());
  p.validate();
  // contiguous set e: e_{0k} = h_k - 1, e_{jk} = h0 - h_j - h_k (j < k)
  std::vector<long> e;
  for (long k = 0; k < p.q; ++k) e.push_back(p.h[size_t(k)] - 1);
  for (long j = 0; j < p.q; ++j)
    for (long k = j + 1; k < p.q; ++k) e.push_back(p.h0 - p.h[size_t(j)] - p.h[size_t(k)]);
  std::sort(e.rbegin(), e.rend());

  ConjectureResult r;
  for (long i = 0; i < p.q - p.r - 1; ++i) r.maxima.push_back(e[size_t(i)]);
  Int d1 = lcm_or_one(r.maxima[0]);
  for (long i = 0; i < p.r; ++i) r.multiplier *= d1;
  for (size_t i = 1; i < r.maxima.size(); ++i) r.multiplier *= lcm_or_one(r.maxima[i]);

  LinearForm f9 = contiguous_form_odd(p);
  r.ok = true;
  for (const auto& [s, c] : f9.coeff) {
    Rational scaled = c * Rational(r.multiplier);
    if (!is_integer(scaled)) {
      r.ok = false;
      Int d = den(scaled);
      for (long prime : prime_table().upto(1 << 20)) {
        if (d % prime == 0) {
          r.failing_prime = prime;
          break;
        }
      }
      break;
    }
  }
  return r;
}

inline bool h_permutation_invariant(const WellPoisedParams& p, int trials, uint64_t seed) {
  LinearForm base = normalized_form_odd(p);
  std::mt19937_64 rng(seed);
  WellPoisedParams q = p;
  for (int i = 0; i < trials; ++i) {
    std::shuffle(q.h.begin(), q.h.end(), rng);
    if (!(normalized_form_odd(q) == base)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Directions eta and the asymptotic machinery

struct DirectionEta {
  long r = 3, q = 13;
  std::vector<long> eta;  // eta[0] = eta_0, then eta_1..eta_q

  void validate() const {
    if (r < 1 || r % 2 == 0 || q % 2 == 0 || q < r + 4)
      throw InvalidParams("r, q must be odd with q >= r + 4");
    if (long(eta.size()) != q + 1) throw InvalidParams("expected eta_0..eta_q");
    long sum = 0;
    for (long j = 1; j <= q; ++j) {
      if (eta[size_t(j)] < 1 || 2 * eta[size_t(j)] >= eta[0])
        throw InvalidParams("eta_j < eta_0 / 2 fails");
      sum += eta[size_t(j)];
    }
    if (2 * sum > eta[0] * (q - r))
      throw InvalidParams("decay condition sum(eta_j) <= eta_0 (q-r)/2 fails");
  }

  WellPoisedParams at(long n) const {
    WellPoisedParams p;
    p.r = r;
    p.q = q;
    p.h0 = eta[0] * n + 2;
    for (long j = 1; j <= q; ++j) p.h.push_back(eta[size_t(j)] * n + 1);
    return p;
  }

  std::vector<long> sorted_eta() const {
    std::vector<long> s(eta.begin() + 1, eta.end());
    std::sort(s.begin(), s.end());
    return s;
  }
};

// phi_0(x, y), exact floors
inline long phi0_xy(const DirectionEta& d, const Rational& x, const Rational& y) {
  auto fl = [](const Rational& v) { return long(floor_rat(v).convert_to<long long>()); };
  long e0 = d.eta[0];
  long v = 0;
  for (long j = 1; j <= d.q; ++j) {
    long ej = d.eta[size_t(j)];
    if (j <= d.r) {
      v += fl(y) + fl(e0 * x - y) - fl(y - ej * x) - fl((e0 - ej) * x - y) - 2 * fl(ej * x);
    } else {
      v += fl((e0 - 2 * ej) * x) - fl(y - ej * x) - fl((e0 - ej) * x - y);
    }
  }
  return v;
}

// phi(x) = min over y of phi_0(x, y), as a step function on [0, 1).
// Candidate x-breakpoints are all fractions with denominator <= eta_0;
// every floor argument has integer slope of magnitude <= eta_0, so phi
// is constant between consecutive such fractions.
inline StepFunction phi_x(const DirectionEta& d) {
  d.validate();
  long e0 = d.eta[0];
  std::set<Rational> xs{Rational(0)};
  for (long den = 2; den <= e0; ++den)
    for (long num = 1; num < den; ++num) xs.insert(Rational(num) / Rational(den));
  std::vector<Rational> pts(xs.begin(), xs.end());

  StepFunction f;
  for (size_t i = 0; i < pts.size(); ++i) {
    Rational lo = pts[i];
    Rational hi = (i + 1 < pts.size()) ? pts[i + 1] : Rational(1);
    Rational mx = (lo + hi) / 2;
    // y-breakpoints: fractional parts of 0, eta_0 x, eta_j x, (eta_0 - eta_j) x
    std::set<Rational> ys{Rational(0)};
    ys.insert(frac_part(Rational(e0) * mx));
    for (long j = 1; j <= d.q; ++j) {
      ys.insert(frac_part(Rational(d.eta[size_t(j)]) * mx));
      ys.insert(frac_part(Rational(e0 - d.eta[size_t(j)]) * mx));
    }
    std::vector<Rational> yb(ys.begin(), ys.end());
    long best = 0;
    bool first = true;
    for (size_t k = 0; k < yb.size(); ++k) {
      Rational ylo = yb[k];
      Rational yhi = (k + 1 < yb.size()) ? yb[k + 1] : Rational(1);
      long v = phi0_xy(d, mx, (ylo + yhi) / 2);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
    f.x.push_back(lo);
    f.v.push_back(best);
  }
  f.merge_equal();
  return f;
}

// ---------------------------------------------------------------------------
// Complex saddle point and the odd-zeta measure

inline CReal f0_eta(const DirectionEta& d, const CReal& tau) {
  long e0 = d.eta[0];
  CReal s = CReal(Real(d.r) * Real(e0)) * log(CReal(Real(e0)) - tau);
  for (long j = 1; j <= d.q; ++j) {
    long ej = d.eta[size_t(j)];
    s += CReal(Real(ej)) * log(tau - CReal(Real(ej)));
    s -= CReal(Real(e0 - ej)) * log(tau - CReal(Real(e0 - ej)));
  }
  Real c = 0;
  for (long j = 1; j <= d.r; ++j) c -= 2 * d.eta[size_t(j)] * log(Real(d.eta[size_t(j)]));
  for (long j = d.r + 1; j <= d.q; ++j) {
    long w = e0 - 2 * d.eta[size_t(j)];
    if (w > 0) c += w * log(Real(w));
  }
  return s + CReal(c);
}

struct OddSaddle {
  CReal tau0;
  Real c0;
  bool re_below_eta0 = false;
  Real im_f0_dist_pi;  // distance of Im f0(tau0) from pi Z
  bool hypotheses_ok = false;
};

inline OddSaddle saddle_odd(const DirectionEta& d, unsigned digits) {
  d.validate();
  PrecisionGuard guard(digits + 20);
  // (tau - eta0)^r prod (tau - eta_j)  -  tau^r prod (tau - eta0 + eta_j)
  std::vector<Int> p1{Int(1)}, p2{Int(1)};
  auto mul_lin = [](std::vector<Int>& p, long root) {
    std::vector<Int> q(p.size() + 1, Int(0));
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] -= p[i] * root;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  };
  for (long i = 0; i < d.r; ++i) mul_lin(p1, d.eta[0]);
  for (long j = 1; j <= d.q; ++j) mul_lin(p1, d.eta[size_t(j)]);
  for (long i = 0; i < d.r; ++i) mul_lin(p2, 0);
  for (long j = 1; j <= d.q; ++j) mul_lin(p2, d.eta[0] - d.eta[size_t(j)]);
  for (size_t i = 0; i < p1.size(); ++i) p1[i] -= p2[i];
  while (!p1.empty() && p1.back() == 0) p1.pop_back();

  auto roots = polynomial_roots(p1, digits + 10);
  bool found = false;
  CReal best;
  for (const auto& z : roots) {
    if (z.im <= pow10(-long(digits) / 2)) continue;
    if (!found || z.re > best.re) {
      best = z;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no root with positive imaginary part");

  OddSaddle s;
  s.tau0 = best;
  CReal f = f0_eta(d, best);
  s.c0 = -f.re;
  s.re_below_eta0 = best.re < d.eta[0];
  Real pi = 4 * atan(Real(1));
  Real m = f.im / pi;
  Real frac = abs(m - floor(m + Real(1) / 2));
  s.im_f0_dist_pi = frac * pi;
  s.hypotheses_ok = s.re_below_eta0 && s.im_f0_dist_pi > pow10(-6);
  return s;
}

struct OddMeasureReport {
  CReal tau0;
  Real c0, c2;
  Real dpsi_integral;
  Rational invsq_integral;
  std::vector<long> m;
  bool irrational = false;  // C0 > C2 conclusion
  bool hypotheses_ok = false;
  long zeta_lo = 0, zeta_hi = 0;
};

inline OddMeasureReport measure_odd(const DirectionEta& d, unsigned digits) {
  d.validate();
  if (d.r != 3)
    throw InvalidParams("the saddle asymptotics are proved for r = 3 only");
  OddSaddle s = saddle_odd(d, digits);
  StepFunction phi = phi_x(d);
  std::vector<long> es = d.sorted_eta();
  OddMeasureReport r;
  r.tau0 = s.tau0;
  r.c0 = s.c0;
  r.hypotheses_ok = s.hypotheses_ok;
  long m0q = std::max(es[size_t(d.r - 1)], d.eta[0] - 2 * es[size_t(d.r)]);
  for (long j = 1; j <= d.q - d.r; ++j)
    r.m.push_back(std::max(m0q, d.eta[0] - es[0] - es[size_t(d.r + j - 1)]));
  r.dpsi_integral = stieltjes_dpsi(phi, digits);
  r.invsq_integral = inv_square_integral(phi, r.m.back());
  Real c2 = Real(d.r) * Real(r.m[0]);
  for (size_t i = 1; i < r.m.size(); ++i) c2 += r.m[i];
  r.c2 = c2 - (r.dpsi_integral - to_real(r.invsq_integral));
  r.irrational = r.c0 > r.c2;
  r.zeta_lo = d.r + 2;
  r.zeta_hi = d.q - 2;
  return r;
}

}  // namespace zf
