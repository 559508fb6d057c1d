#pragma once

// Exhaustive direction searches at desk scale.  Candidates are ranked
// with double-precision evaluations (exact integer floors for phi, a
// hand-rolled digamma); callers re-evaluate leaders at full precision.

#include "zetaforms/measures.hpp"

#include <complex>
#include <map>
#include <thread>

namespace zf {

namespace detail {

struct Frac {
  long n, d;  // 0 <= n < d
  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  bool operator==(const Frac& o) const { return n * o.d == o.n * d; }
};

template <size_t K>
double phi_integrals_fast(const std::array<long, K>& base,
                          const std::vector<std::array<long, K>>& profiles, long cut) {
  // returns I1 - I2 = int phi dpsi - int_0^{1/cut} phi dx/x^2
  std::vector<Frac> bps;
  std::set<long> entries(base.begin(), base.end());
  for (const auto& pr : profiles) entries.insert(pr.begin(), pr.end());
  for (long e : entries)
    for (long k = 1; k < e; ++k) bps.push_back({k, e});
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::set<std::array<long, K>> distinct(profiles.begin(), profiles.end());
  std::vector<std::array<long, K>> plist(distinct.begin(), distinct.end());

  double i1 = 0, i2 = 0;
  long prev_v = 0;
  double inv_m3 = 1.0 / double(cut);
  for (size_t i = 0; i <= bps.size(); ++i) {
    // interval [x_i, x_{i+1}) with x_0 = 0 handled by prev_v = 0 start
    if (i == 0) continue;
    long n2, d2;  // midpoint of [bps[i-1], bps[i] or 1)
    if (i < bps.size()) {
      n2 = bps[i - 1].n * bps[i].d + bps[i].n * bps[i - 1].d;
      d2 = 2 * bps[i - 1].d * bps[i].d;
    } else {
      n2 = bps[i - 1].n + bps[i - 1].d;
      d2 = 2 * bps[i - 1].d;
    }
    long base_floors = 0;
    for (long e : base) base_floors += (e * n2) / d2;
    long v = 0;
    for (const auto& pr : plist) {
      long s = 0;
      for (long e : pr) s += (e * n2) / d2;
      v = std::max(v, base_floors - s);
    }
    double x = double(bps[i - 1].n) / double(bps[i - 1].d);
    if (v != prev_v) i1 -= (v - prev_v) * digamma_d(x);
    // 1/x^2 piece, clipped at 1/m3
    if (v != 0) {
      double lo = x;
      double hi = (i < bps.size()) ? double(bps[i].n) / double(bps[i].d) : 1.0;
      if (lo < inv_m3) i2 += v * (1 / lo - 1 / std::min(hi, inv_m3));
    }
    prev_v = v;
  }
  i1 += prev_v * digamma_d(1.0);
  return i1 - i2;
}

inline std::complex<double> f0_z3_d(const Direction33& d, std::complex<double> tau) {
  std::complex<double> s = 0;
  for (long a : d.alpha) s += double(a) * std::log(std::complex<double>(double(a)) - tau);
  for (int k = 0; k < 2; ++k)
    if (d.beta[size_t(k)] != 0)
      s -= double(d.beta[size_t(k)]) * std::log(tau - double(d.beta[size_t(k)]));
  for (int k = 2; k < 4; ++k)
    s -= double(d.beta[size_t(k)]) * std::log(double(d.beta[size_t(k)]) - tau);
  auto cl = [](long v) { return double(v) * std::log(double(v)); };
  s -= cl(d.alpha[0] - d.beta[0]);
  s -= cl(d.alpha[1] - d.beta[1]);
  s += cl(d.beta[2] - d.alpha[2]);
  s += cl(d.beta[3] - d.alpha[3]);
  return s;
}

inline std::complex<double> f0_z2_d(const Direction32& d, std::complex<double> tau) {
  std::complex<double> s = 0;
  for (long a : d.alpha) s += double(a) * std::log(std::complex<double>(double(a)) - tau);
  if (d.beta[0] != 0) s -= double(d.beta[0]) * std::log(tau - double(d.beta[0]));
  for (int k = 1; k < 3; ++k)
    s -= double(d.beta[size_t(k)]) * std::log(double(d.beta[size_t(k)]) - tau);
  auto cl = [](long v) { return double(v) * std::log(double(v)); };
  s -= cl(d.alpha[0] - d.beta[0]);
  s += cl(d.beta[1] - d.alpha[1]);
  s += cl(d.beta[2] - d.alpha[2]);
  return s;
}

}  // namespace detail

inline std::optional<SearchHit> evaluate_fast_z3(const Direction33& d, OrbitMode mode) {
  OrbitZ3 orb = orbit_z3(d, mode);
  long e2a = 0, e3a = 0, e2b = 0, e3b = 0;
  {
    const auto &a = d.alpha, &b = d.beta;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        e2a += a[size_t(i)] * a[size_t(j)];
        e2b += b[size_t(i)] * b[size_t(j)];
        for (int k = j + 1; k < 4; ++k) {
          e3a += a[size_t(i)] * a[size_t(j)] * a[size_t(k)];
          e3b += b[size_t(i)] * b[size_t(j)] * b[size_t(k)];
        }
      }
  }
  long e4a = d.alpha[0] * d.alpha[1] * d.alpha[2] * d.alpha[3];
  long e4b = d.beta[0] * d.beta[1] * d.beta[2] * d.beta[3];
  double qa = double(e2a - e2b), qb = double(-(e3a - e3b)), qc = double(e4a - e4b);
  if (qa == 0) return std::nullopt;
  double disc = qb * qb - 4 * qa * qc;
  if (disc <= 0) return std::nullopt;
  double r1 = (-qb + std::sqrt(disc)) / (2 * qa), r2 = (-qb - std::sqrt(disc)) / (2 * qa);
  double tau0 = std::min(r1, r2), tau1 = std::max(r1, r2);

  SearchHit hit;
  hit.dir = orb.base;
  hit.c0 = -detail::f0_z3_d(orb.base, tau0).real();
  hit.c1 = detail::f0_z3_d(orb.base, tau1).real();
  std::vector<std::array<long, 8>> profiles;
  profiles.reserve(orb.elements.size());
  for (const auto& e : orb.elements) profiles.push_back(e.pi);
  long cut = (mode == OrbitMode::ab_trivial) ? orb.m1 : orb.m3;
  double log_phi = detail::phi_integrals_fast(pi_profile(cmatrix(orb.base)), profiles, cut);
  hit.c2 = 2 * orb.m1 + orb.m2 - log_phi;
  if (!(hit.c0 > hit.c2)) return std::nullopt;
  hit.mu = (hit.c0 + hit.c1) / (hit.c0 - hit.c2);
  hit.canon = orb.m0.front().dir.normalized();
  for (const auto& e : orb.m0) hit.canon = std::min(hit.canon, e.dir.normalized());
  return hit;
}

inline std::vector<SearchHit> search_directions_z3(long sum_bound, OrbitMode mode,
                                                   bool relaxed_sum, size_t keep) {
  std::map<std::array<long, 8>, SearchHit> best;
  for (long a1 = 1; a1 <= sum_bound; ++a1)
    for (long a2 = a1; a1 + a2 <= sum_bound; ++a2)
      for (long a3 = a2; a1 + a2 + a3 <= sum_bound; ++a3)
        for (long a4 = a3; a1 + a2 + a3 + a4 <= sum_bound; ++a4) {
          long sa = a1 + a2 + a3 + a4;
          for (long b2 = 0; b2 < a1; ++b2) {
            long sbmax = relaxed_sum ? sum_bound : sa;
            for (long b3 = a4 + 1; b2 + 2 * b3 <= sbmax; ++b3) {
              long b4lo = relaxed_sum ? std::max(b3, sa - b2 - b3) : sa - b2 - b3;
              long b4hi = relaxed_sum ? sbmax - b2 - b3 : sa - b2 - b3;
              for (long b4 = std::max(b4lo, b3); b4 <= b4hi; ++b4) {
                if (b4 <= a4) continue;
                Direction33 dir{{a1, a2, a3, a4}, {0, b2, b3, b4}};
                auto hit = evaluate_fast_z3(dir, mode);
                if (!hit) continue;
                auto it = best.find(hit->canon);
                if (it == best.end() || hit->mu < it->second.mu) best[hit->canon] = *hit;
              }
            }
          }
        }
  std::vector<SearchHit> out;
  for (auto& [k, v] : best) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const SearchHit& a, const SearchHit& b) {
    return a.mu != b.mu ? a.mu < b.mu : a.canon < b.canon;
  });
  if (out.size() > keep) out.resize(keep);
  return out;
}

inline std::optional<SearchHitZ2> evaluate_fast_z2(const Direction32& d) {
  OrbitZ2 orb = orbit_z2(d);
  long e1a = d.alpha[0] + d.alpha[1] + d.alpha[2];
  long e1b = d.beta[0] + d.beta[1] + d.beta[2];
  long e2a = d.alpha[0] * d.alpha[1] + d.alpha[0] * d.alpha[2] + d.alpha[1] * d.alpha[2];
  long e2b = d.beta[0] * d.beta[1] + d.beta[0] * d.beta[2] + d.beta[1] * d.beta[2];
  long e3a = d.alpha[0] * d.alpha[1] * d.alpha[2];
  long e3b = d.beta[0] * d.beta[1] * d.beta[2];
  double qa = double(e1b - e1a), qb = double(e2a - e2b), qc = double(e3b - e3a);
  if (qa == 0) return std::nullopt;
  double disc = qb * qb - 4 * qa * qc;
  if (disc <= 0) return std::nullopt;
  double r1 = (-qb + std::sqrt(disc)) / (2 * qa), r2 = (-qb - std::sqrt(disc)) / (2 * qa);
  double tau0 = std::min(r1, r2), tau1 = std::max(r1, r2);
  double c0 = -detail::f0_z2_d(orb.base, tau0).real();
  double c1 = detail::f0_z2_d(orb.base, tau1).real();
  std::vector<std::array<long, 5>> profiles;
  for (const auto& e : orb.elements) profiles.push_back(e.pi);
  double log_phi = detail::phi_integrals_fast(pi_profile(cmatrix(orb.base)), profiles, orb.m3);
  double c2 = orb.m1 + orb.m2 - log_phi;
  if (!(c0 > c2)) return std::nullopt;
  SearchHitZ2 hit;
  hit.dir = orb.base;
  hit.mu = (c0 + c1) / (c0 - c2);
  hit.canon = orb.elements.front().dir.normalized();
  for (const auto& e : orb.elements) hit.canon = std::min(hit.canon, e.dir.normalized());
  return hit;
}

inline std::vector<SearchHitZ2> search_directions_z2(long beta_sum_bound, size_t keep) {
  std::map<std::array<long, 6>, SearchHitZ2> best;
  for (long a1 = 1; 3 * a1 <= beta_sum_bound; ++a1)
    for (long a2 = a1; a1 + 2 * a2 <= beta_sum_bound; ++a2)
      for (long a3 = a2; a1 + a2 + a3 <= beta_sum_bound; ++a3) {
        long sa = a1 + a2 + a3;
        for (long b2 = a3 + 1; 2 * b2 <= beta_sum_bound; ++b2)
          for (long b3 = std::max(b2, sa - b2); b2 + b3 <= beta_sum_bound; ++b3) {
            Direction32 dir{{a1, a2, a3}, {0, b2, b3}};
            auto hit = evaluate_fast_z2(dir);
            if (!hit) continue;
            auto it = best.find(hit->canon);
            if (it == best.end() || hit->mu < it->second.mu) best[hit->canon] = *hit;
          }
      }
  std::vector<SearchHitZ2> out;
  for (auto& [k, v] : best) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const SearchHitZ2& a, const SearchHitZ2& b) {
    return a.mu != b.mu ? a.mu < b.mu : a.canon < b.canon;
  });
  if (out.size() > keep) out.resize(keep);
  return out;
}

}  // namespace zf
