#pragma once

// Irrationality-measure machinery for zeta(3) and zeta(2): the step
// function phi from an orbit, its two integrals, the saddle-point
// constants from the quadratic root pair, and the direction search.

#include "zetaforms/groups.hpp"
#include "zetaforms/step_function.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <vector>

namespace zf {

// ---------------------------------------------------------------------------
// phi(x) = max over the orbit of sum [c_i x] - sum [c'_i x], evaluated
// exactly between consecutive candidate breakpoints k/c.

namespace detail {

template <typename Profile>
StepFunction phi_from_profiles(const Profile& base, const std::vector<Profile>& others) {
  std::set<Rational> bps{Rational(0)};
  std::set<long> entries;
  for (long e : base) entries.insert(e);
  for (const auto& pr : others)
    for (long e : pr) entries.insert(e);
  for (long e : entries)
    for (long k = 1; k < e; ++k) bps.insert(Rational(k) / Rational(e));

  // deduplicate factorial profiles (row permutations repeat them)
  std::set<Profile> distinct(others.begin(), others.end());

  StepFunction f;
  std::vector<Rational> pts(bps.begin(), bps.end());
  for (size_t i = 0; i < pts.size(); ++i) {
    Rational lo = pts[i];
    Rational hi = (i + 1 < pts.size()) ? pts[i + 1] : Rational(1);
    Rational mid = (lo + hi) / 2;
    long base_floors = 0;
    for (long e : base) base_floors += long(floor_rat(Rational(e) * mid).convert_to<long long>());
    long best = 0;
    for (const auto& pr : distinct) {
      long s = 0;
      for (long e : pr) s += long(floor_rat(Rational(e) * mid).convert_to<long long>());
      best = std::max(best, base_floors - s);
    }
    f.x.push_back(lo);
    f.v.push_back(best);
  }
  f.merge_equal();
  return f;
}

}  // namespace detail

inline StepFunction phi_function_z3(const OrbitZ3& orb) {
  std::vector<std::array<long, 8>> profiles;
  profiles.reserve(orb.elements.size());
  for (const auto& e : orb.elements) profiles.push_back(e.pi);
  return detail::phi_from_profiles(pi_profile(cmatrix(orb.base)), profiles);
}

inline StepFunction phi_function_z2(const OrbitZ2& orb) {
  std::vector<std::array<long, 5>> profiles;
  profiles.reserve(orb.elements.size());
  for (const auto& e : orb.elements) profiles.push_back(e.pi);
  return detail::phi_from_profiles(pi_profile(cmatrix(orb.base)), profiles);
}

// ---------------------------------------------------------------------------
// Saddle-point constants

struct SaddleZ3 {
  Real tau0, tau1, c0, c1;
};

// f0 for the zeta(3) direction, principal-branch logs; terms with a
// zero coefficient are dropped
inline CReal f0_z3(const Direction33& d, const CReal& tau) {
  CReal s{Real(0), Real(0)};
  for (int j = 0; j < 4; ++j)
    s += CReal(Real(d.alpha[size_t(j)])) * log(CReal(Real(d.alpha[size_t(j)])) - tau);
  for (int k = 0; k < 2; ++k)
    if (d.beta[size_t(k)] != 0)
      s -= CReal(Real(d.beta[size_t(k)])) * log(tau - CReal(Real(d.beta[size_t(k)])));
  for (int k = 2; k < 4; ++k)
    s -= CReal(Real(d.beta[size_t(k)])) * log(CReal(Real(d.beta[size_t(k)])) - tau);
  auto clog = [](long v) { return Real(v) * log(Real(v)); };
  s -= CReal(clog(d.alpha[0] - d.beta[0]));
  s -= CReal(clog(d.alpha[1] - d.beta[1]));
  s += CReal(clog(d.beta[2] - d.alpha[2]));
  s += CReal(clog(d.beta[3] - d.alpha[3]));
  return s;
}

inline SaddleZ3 saddle_z3(const Direction33& d_in, unsigned digits) {
  Direction33 d = d_in.shifted_to_zero();
  d.validate();
  PrecisionGuard guard(digits + 10);
  // elementary symmetric differences; the cubic term cancels by the sum rule
  auto e234 = [](const std::array<long, 4>& z) {
    long e2 = 0, e3 = 0;
    long e4mul = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) e2 += z[size_t(i)] * z[size_t(j)];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) e3 += z[size_t(i)] * z[size_t(j)] * z[size_t(k)];
    for (int i = 0; i < 4; ++i) e4mul *= z[size_t(i)];
    return std::array<long, 3>{e2, e3, e4mul};
  };
  auto ea = e234(d.alpha), eb = e234(d.beta);
  long qa = ea[0] - eb[0];       // tau^2 coefficient
  long qb = -(ea[1] - eb[1]);    // tau coefficient
  long qc = ea[2] - eb[2];       // constant
  if (qa == 0) throw InvalidParams("saddle polynomial degenerates (quadratic term vanishes)");
  Real disc = Real(qb) * Real(qb) - 4 * Real(qa) * Real(qc);
  if (disc <= 0) throw InvalidParams("saddle polynomial has no real root pair");
  Real sq = sqrt(disc);
  Real r1 = (-Real(qb) + sq) / (2 * Real(qa));
  Real r2 = (-Real(qb) - sq) / (2 * Real(qa));
  SaddleZ3 s;
  s.tau0 = min(r1, r2);
  s.tau1 = max(r1, r2);
  s.c0 = -f0_z3(d, CReal(s.tau0)).re;
  s.c1 = f0_z3(d, CReal(s.tau1)).re;
  return s;
}

// f0 for the zeta(2) direction (beta1 = 0 after the shift, so the
// tau - beta1 log carries coefficient zero and is dropped)
inline CReal f0_z2(const Direction32& d, const CReal& tau) {
  CReal s{Real(0), Real(0)};
  for (int j = 0; j < 3; ++j) s += CReal(Real(d.alpha[size_t(j)])) * log(CReal(Real(d.alpha[size_t(j)])) - tau);
  if (d.beta[0] != 0) s -= CReal(Real(d.beta[0])) * log(tau - CReal(Real(d.beta[0])));
  for (int k = 1; k < 3; ++k)
    s -= CReal(Real(d.beta[size_t(k)])) * log(CReal(Real(d.beta[size_t(k)])) - tau);
  auto clog = [](long v) { return Real(v) * log(Real(v)); };
  s -= CReal(clog(d.alpha[0] - d.beta[0]));
  s += CReal(clog(d.beta[1] - d.alpha[1]));
  s += CReal(clog(d.beta[2] - d.alpha[2]));
  return s;
}

inline SaddleZ3 saddle_z2(const Direction32& d_in, unsigned digits) {
  Direction32 d = d_in.shifted_to_zero();
  d.validate();
  PrecisionGuard guard(digits + 10);
  long e1a = d.alpha[0] + d.alpha[1] + d.alpha[2];
  long e1b = d.beta[0] + d.beta[1] + d.beta[2];
  long e2a = d.alpha[0] * d.alpha[1] + d.alpha[0] * d.alpha[2] + d.alpha[1] * d.alpha[2];
  long e2b = d.beta[0] * d.beta[1] + d.beta[0] * d.beta[2] + d.beta[1] * d.beta[2];
  long e3a = d.alpha[0] * d.alpha[1] * d.alpha[2];
  long e3b = d.beta[0] * d.beta[1] * d.beta[2];
  long qa = e1b - e1a, qb = e2a - e2b, qc = e3b - e3a;
  if (qa == 0) throw InvalidParams("saddle polynomial degenerates (quadratic term vanishes)");
  Real disc = Real(qb) * Real(qb) - 4 * Real(qa) * Real(qc);
  if (disc <= 0) throw InvalidParams("saddle polynomial has no real root pair");
  Real sq = sqrt(disc);
  Real r1 = (-Real(qb) + sq) / (2 * Real(qa));
  Real r2 = (-Real(qb) - sq) / (2 * Real(qa));
  SaddleZ3 s;
  s.tau0 = min(r1, r2);
  s.tau1 = max(r1, r2);
  s.c0 = -f0_z2(d, CReal(s.tau0)).re;
  s.c1 = f0_z2(d, CReal(s.tau1)).re;
  return s;
}

// ---------------------------------------------------------------------------
// Measure reports

enum class Verdict { measure, no_conclusion };

struct MeasureReport {
  CReal tau0, tau1;
  Real c0, c1, c2;
  Real dpsi_integral;       // int phi d(psi)
  Rational invsq_integral;  // int phi dx/x^2 up to 1/m3, exact
  long m1 = 0, m2 = 0, m3 = 0;
  std::optional<Real> mu;
  Verdict verdict = Verdict::no_conclusion;
  size_t orbit_size = 0;
};

inline MeasureReport measure_z3(const Direction33& d, OrbitMode mode = OrbitMode::full,
                                unsigned digits = 30) {
  OrbitZ3 orb = orbit_z3(d, mode);
  StepFunction phi = phi_function_z3(orb);
  MeasureReport r;
  r.m1 = orb.m1;
  r.m2 = orb.m2;
  r.m3 = orb.m3;
  r.orbit_size = orb.elements.size();
  r.dpsi_integral = stieltjes_dpsi(phi, digits);
  // The (a,b)-trivial record uses the wider prime window (up to m1 n);
  // the min window is conservative there, as the actual denominator
  // growth of the forms confirms.  The full-orbit window stays at m3 n.
  long cut = (mode == OrbitMode::ab_trivial) ? orb.m1 : orb.m3;
  r.invsq_integral = inv_square_integral(phi, cut);
  SaddleZ3 s = saddle_z3(orb.base, digits);
  r.tau0 = CReal(s.tau0);
  r.tau1 = CReal(s.tau1);
  r.c0 = s.c0;
  r.c1 = s.c1;
  r.c2 = 2 * orb.m1 + orb.m2 - (r.dpsi_integral - to_real(r.invsq_integral));
  if (r.c0 > r.c2) {
    r.mu = (r.c0 + r.c1) / (r.c0 - r.c2);
    r.verdict = Verdict::measure;
  }
  return r;
}

inline MeasureReport measure_z2(const Direction32& d_in, unsigned digits = 30) {
  // the measure constants depend on which alpha pairs with the
  // polynomial brick; ascending order realizes the record pairing
  Direction32 d = d_in;
  std::sort(d.alpha.begin(), d.alpha.end());
  if (d.beta[1] > d.beta[2]) std::swap(d.beta[1], d.beta[2]);
  OrbitZ2 orb = orbit_z2(d);
  StepFunction phi = phi_function_z2(orb);
  MeasureReport r;
  r.m1 = orb.m1;
  r.m2 = orb.m2;
  r.m3 = orb.m3;
  r.orbit_size = orb.elements.size();
  r.dpsi_integral = stieltjes_dpsi(phi, digits);
  r.invsq_integral = inv_square_integral(phi, orb.m3);
  SaddleZ3 s = saddle_z2(orb.base, digits);
  r.tau0 = CReal(s.tau0);
  r.tau1 = CReal(s.tau1);
  r.c0 = s.c0;
  r.c1 = s.c1;
  r.c2 = orb.m1 + orb.m2 - (r.dpsi_integral - to_real(r.invsq_integral));
  if (r.c0 > r.c2) {
    r.mu = (r.c0 + r.c1) / (r.c0 - r.c2);
    r.verdict = Verdict::measure;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Direction search (double precision ranking; callers re-evaluate the
// leaders with measure_z3/measure_z2)

namespace detail {

inline double digamma_d(double x) {
  double acc = 0;
  while (x < 12) {
    acc -= 1 / x;
    x += 1;
  }
  double u = 1 / (x * x);
  double series =
      1.0 / 12 -
      u * (1.0 / 120 - u * (1.0 / 252 - u * (1.0 / 240 - u * (1.0 / 132 - u * 691.0 / 32760))));
  return acc + std::log(x) - 0.5 / x - u * series;
}

}  // namespace detail

struct SearchHit {
  Direction33 dir;
  double mu = 0, c0 = 0, c1 = 0, c2 = 0;
  std::array<long, 8> canon{};
};

struct SearchHitZ2 {
  Direction32 dir;
  double mu = 0;
  std::array<long, 6> canon{};
};

}  // namespace zf
