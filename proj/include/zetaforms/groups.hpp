#pragma once

// The hypergeometric permutation groups for the zeta(3) and zeta(2)
// constructions: c-matrices, generator actions on direction vectors,
// position-permutation enumeration (group orders 1920 / 96 / 120), the
// twenty left-coset representative words, orbit sets M0 / M with their
// factorial profiles, the exponents nu_p and the arithmetic correction
// Phi_n.
//
// Generator words act on directions left to right: "a1 h" applies a1
// first.  All direction-level maps keep beta_1 = 0, so directions are
// shifted into that normalization on entry.

#include "zetaforms/forms.hpp"
#include "zetaforms/primes.hpp"
#include "zetaforms/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zf {

// ---------------------------------------------------------------------------
// Directions (integer vectors scaling linearly with n)

struct Direction33 {
  std::array<long, 4> alpha{}, beta{};

  void validate(bool allow_sum_slack = false) const {
    long blo = std::max(beta[0], beta[1]);
    long bhi = std::min(beta[2], beta[3]);
    long alo = *std::min_element(alpha.begin(), alpha.end());
    long ahi = *std::max_element(alpha.begin(), alpha.end());
    if (!(blo < alo && ahi < bhi))
      throw InvalidParams("direction ordering violated: {b1,b2} < {a} < {b3,b4} fails");
    long sa = alpha[0] + alpha[1] + alpha[2] + alpha[3];
    long sb = beta[0] + beta[1] + beta[2] + beta[3];
    if (allow_sum_slack ? !(sa <= sb) : (sa != sb))
      throw InvalidParams("direction sum condition violated: sum(alpha) = sum(beta) fails");
  }

  // parameter set at scale n (Eq.-5.1 pattern)
  ParamSet33 at(long n) const {
    return {{alpha[0] * n + 1, alpha[1] * n + 1, alpha[2] * n + 1, alpha[3] * n + 1},
            {beta[0] * n + 1, beta[1] * n + 1, beta[2] * n + 2, beta[3] * n + 2}};
  }

  Direction33 shifted_to_zero() const {
    Direction33 d = *this;
    long s = beta[0];
    for (auto& x : d.alpha) x -= s;
    for (auto& x : d.beta) x -= s;
    return d;
  }

  // canonical collection: shift min(beta) to 0, sort alpha, sort the
  // lower and upper beta pairs
  std::array<long, 8> normalized() const {
    std::array<long, 4> a = alpha, b = beta;
    std::sort(b.begin(), b.end());
    long s = b[0];
    for (auto& x : a) x -= s;
    for (auto& x : b) x -= s;
    std::sort(a.begin(), a.end());
    return {a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]};
  }

  bool operator==(const Direction33&) const = default;
  auto operator<=>(const Direction33&) const = default;
};

struct Direction32 {
  std::array<long, 3> alpha{}, beta{};

  void validate() const {
    long bhi = std::min(beta[1], beta[2]);
    long alo = *std::min_element(alpha.begin(), alpha.end());
    long ahi = *std::max_element(alpha.begin(), alpha.end());
    if (!(beta[0] < alo && ahi < bhi))
      throw InvalidParams("direction ordering violated: {b1} < {a} < {b2,b3} fails");
    if (!(alpha[0] + alpha[1] + alpha[2] <= beta[0] + beta[1] + beta[2]))
      throw InvalidParams("direction sum condition violated: sum(alpha) <= sum(beta) fails");
  }

  ParamSet32 at(long n) const {
    return {{alpha[0] * n + 1, alpha[1] * n + 1, alpha[2] * n + 1},
            {beta[0] * n + 1, beta[1] * n + 2, beta[2] * n + 2}};
  }

  Direction32 shifted_to_zero() const {
    Direction32 d = *this;
    long s = beta[0];
    for (auto& x : d.alpha) x -= s;
    for (auto& x : d.beta) x -= s;
    return d;
  }

  std::array<long, 6> normalized() const {
    std::array<long, 3> a = alpha;
    long s = beta[0];
    std::array<long, 3> b = {beta[0] - s, beta[1] - s, beta[2] - s};
    for (auto& x : a) x -= s;
    std::sort(a.begin(), a.end());
    if (b[1] > b[2]) std::swap(b[1], b[2]);
    return {a[0], a[1], a[2], b[0], b[1], b[2]};
  }

  bool operator==(const Direction32&) const = default;
  auto operator<=>(const Direction32&) const = default;
};

// ---------------------------------------------------------------------------
// c-matrices.  z3: 16 entries row-major (j,k); z2: entry 0 is c00,
// then the 3x3 block row-major.

struct CMatrixZ3 {
  std::array<long, 16> e{};
  long& at(int j, int k) { return e[size_t(4 * (j - 1) + (k - 1))]; }
  long at(int j, int k) const { return e[size_t(4 * (j - 1) + (k - 1))]; }
  bool admissible() const {
    return std::all_of(e.begin(), e.end(), [](long x) { return x > 0; });
  }
  long max_entry() const { return *std::max_element(e.begin(), e.end()); }
};

struct CMatrixZ2 {
  std::array<long, 10> e{};
  long& c00() { return e[0]; }
  long c00() const { return e[0]; }
  long& at(int j, int k) { return e[size_t(3 * (j - 1) + (k - 1) + 1)]; }
  long at(int j, int k) const { return e[size_t(3 * (j - 1) + (k - 1) + 1)]; }
  bool admissible() const {
    return std::all_of(e.begin(), e.end(), [](long x) { return x > 0; });
  }
  long max_entry() const { return *std::max_element(e.begin(), e.end()); }
};

inline CMatrixZ3 cmatrix(const Direction33& d) {
  CMatrixZ3 m;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      long diff = d.alpha[size_t(j - 1)] - d.beta[size_t(k - 1)];
      m.at(j, k) = diff > 0 ? diff : -diff;
    }
  return m;
}

// Eq.-4.7 case split, with the -1 on the pole side
inline CMatrixZ3 cmatrix_params(const ParamSet33& p) {
  CMatrixZ3 m;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 4; ++k) {
      long a = p.a[size_t(j - 1)], b = p.b[size_t(k - 1)];
      m.at(j, k) = a >= b ? a - b : b - a - 1;
    }
  return m;
}

inline CMatrixZ2 cmatrix(const Direction32& d) {
  CMatrixZ2 m;
  m.c00() = (d.beta[0] + d.beta[1] + d.beta[2]) - (d.alpha[0] + d.alpha[1] + d.alpha[2]);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      long diff = d.alpha[size_t(j - 1)] - d.beta[size_t(k - 1)];
      m.at(j, k) = diff > 0 ? diff : -diff;
    }
  return m;
}

// ---------------------------------------------------------------------------
// Generators as direction maps (beta1 = 0 assumed, preserved)

enum class Gen : uint8_t { A1, A2, A3, B, H };
using Word = std::vector<Gen>;

inline Direction33 act(Gen g, const Direction33& d) {
  Direction33 r = d;
  switch (g) {
    case Gen::A1:
      std::swap(r.alpha[0], r.alpha[3]);
      break;
    case Gen::A2:
      std::swap(r.alpha[1], r.alpha[3]);
      break;
    case Gen::A3:
      std::swap(r.alpha[2], r.alpha[3]);
      break;
    case Gen::B:
      std::swap(r.beta[2], r.beta[3]);
      break;
    case Gen::H: {
      // direction form of the nontrivial generator (b1 = 1 normalization)
      long a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2], a4 = d.alpha[3];
      long b1 = d.beta[0], b2 = d.beta[1], b3 = d.beta[2], b4 = d.beta[3];
      r.alpha = {b3 - a3, a2, b3 - a1, a4};
      r.beta = {b1, b2 + b3 - a1 - a3, b3, b3 + b4 - a1 - a3};
      break;
    }
  }
  return r;
}

enum class GenZ2 : uint8_t { A1, A2, B, H };
using WordZ2 = std::vector<GenZ2>;

inline Direction32 act(GenZ2 g, const Direction32& d) {
  Direction32 r = d;
  switch (g) {
    case GenZ2::A1:
      std::swap(r.alpha[0], r.alpha[2]);
      break;
    case GenZ2::A2:
      std::swap(r.alpha[1], r.alpha[2]);
      break;
    case GenZ2::B:
      std::swap(r.beta[1], r.beta[2]);
      break;
    case GenZ2::H: {
      long a1 = d.alpha[0], a2 = d.alpha[1], a3 = d.alpha[2];
      long b1 = d.beta[0], b2 = d.beta[1], b3 = d.beta[2];
      r.alpha = {b3 - a3, a2, b3 - a1};
      r.beta = {b1, b2 + b3 - a1 - a3, b3};
      break;
    }
  }
  return r;
}

template <typename Dir, typename G>
Dir apply_word(const std::vector<G>& word, Dir d) {
  for (G g : word) d = act(g, d);
  return d;
}

// ---------------------------------------------------------------------------
// Position permutations (for the group-order and parity statements)

using Perm = std::vector<uint8_t>;

inline Perm perm_identity(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = uint8_t(i);
  return p;
}

inline Perm perm_compose(const Perm& f, const Perm& g) {  // (f o g)(i) = f[g[i]]
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Perm perm_from_swaps(size_t n, std::initializer_list<std::pair<int, int>> swaps) {
  Perm p = perm_identity(n);
  for (auto [i, j] : swaps) std::swap(p[size_t(i)], p[size_t(j)]);
  return p;
}

inline bool perm_is_even(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    transpositions += int(len) - 1;
  }
  return transpositions % 2 == 0;
}

inline std::vector<Perm> group_closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::vector<Perm> queue{perm_identity(gens.at(0).size())};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    Perm cur = queue[head];
    for (const Perm& g : gens) {
      Perm nxt = perm_compose(g, cur);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return queue;
}

// z3 position generators over the 16 entries
inline Perm z3_perm(Gen g) {
  auto row_swap = [](int r1, int r2) {
    Perm p = perm_identity(16);
    for (int k = 0; k < 4; ++k) std::swap(p[size_t(4 * r1 + k)], p[size_t(4 * r2 + k)]);
    return p;
  };
  switch (g) {
    case Gen::A1:
      return row_swap(0, 3);
    case Gen::A2:
      return row_swap(1, 3);
    case Gen::A3:
      return row_swap(2, 3);
    case Gen::B: {
      Perm p = perm_identity(16);
      for (int j = 0; j < 4; ++j) std::swap(p[size_t(4 * j + 2)], p[size_t(4 * j + 3)]);
      return p;
    }
    case Gen::H:
      // (c11 c33)(c13 c31)(c22 c44)(c24 c42)
      return perm_from_swaps(16, {{0, 10}, {2, 8}, {5, 15}, {7, 13}});
  }
  return perm_identity(16);
}

// column swap of b1, b2; equals the long generator word in the text
inline Perm z3_perm_b12() {
  Perm p = perm_identity(16);
  for (int j = 0; j < 4; ++j) std::swap(p[size_t(4 * j)], p[size_t(4 * j + 1)]);
  return p;
}

// z2 position generators over the 10 entries (0 = c00)
inline Perm z2_perm(GenZ2 g) {
  switch (g) {
    case GenZ2::A1:  // rows 1,3
      return perm_from_swaps(10, {{1, 7}, {2, 8}, {3, 9}});
    case GenZ2::A2:  // rows 2,3
      return perm_from_swaps(10, {{4, 7}, {5, 8}, {6, 9}});
    case GenZ2::B:  // cols 2,3
      return perm_from_swaps(10, {{2, 3}, {5, 6}, {8, 9}});
    case GenZ2::H:  // (c00 c22)(c11 c33)(c13 c31)
      return perm_from_swaps(10, {{0, 5}, {1, 9}, {3, 7}});
  }
  return perm_identity(10);
}

// Positions transform contravariantly to directions: if a generator g
// sends the matrix of d to m'[i] = m[p_g[i]], then applying the word
// g_1 g_2 ... left to right composes the position maps left to right
// as well: m'[i] = m[(p_{g_1} o p_{g_2} o ...)[i]].
inline Perm perm_of_word(const Word& w) {
  Perm p = perm_identity(16);
  for (Gen g : w) p = perm_compose(p, z3_perm(g));
  return p;
}

// ---------------------------------------------------------------------------
// The twenty left-coset representative words

inline const std::array<Word, 20>& coset_words_z3() {
  using enum Gen;
  static const std::array<Word, 20> words = {{
      {},
      {A1, A2, A3, H},
      {A1, H},
      {A2, A1, H},
      {H},
      {H, A1, A2, A3, H},
      {A2, A3, H},
      {A3, H},
      {H, A3, B, H},
      {A1, A2, H, A1, A2, B, H},
      {A2, H, A3, A2, B, H},
      {B, H},
      {A2, A3, B, H},
      {A3, B, H},
      {A1, A2, A3, B, H},
      {A1, B, H},
      {A2, A1, B, H},
      {A2, H, A1, A2, B, H},
      {A3, H, A1, B, H},
      {H, A1, B, H},
  }};
  return words;
}

// ---------------------------------------------------------------------------
// Orbits

enum class OrbitMode { full, ab_trivial };

// factorial profile positions entering Pi(c):
// z3: c21 c31 c41 c12 c32 c42 c33 c44; z2: c00 c21 c31 c22 c33
inline std::array<long, 8> pi_profile(const CMatrixZ3& m) {
  return {m.at(2, 1), m.at(3, 1), m.at(4, 1), m.at(1, 2),
          m.at(3, 2), m.at(4, 2), m.at(3, 3), m.at(4, 4)};
}

inline std::array<long, 5> pi_profile(const CMatrixZ2& m) {
  return {m.c00(), m.at(2, 1), m.at(3, 1), m.at(2, 2), m.at(3, 3)};
}

struct OrbitElementZ3 {
  Direction33 dir;
  std::array<long, 8> pi{};
  bool admissible = false;
};

struct OrbitZ3 {
  Direction33 base;                      // shifted to beta1 = 0
  std::vector<OrbitElementZ3> m0;        // the 20 coset-word images
  std::vector<OrbitElementZ3> elements;  // M: images under q_j then row perms
  long m0_char = 0, m1 = 0, m2 = 0, m3 = 0;

  size_t count_distinct_m0() const {
    std::set<std::array<long, 8>> s;
    for (const auto& e : m0) s.insert(e.dir.normalized());
    return s.size();
  }
  size_t count_distinct_m() const {
    std::set<std::pair<std::array<long, 4>, std::array<long, 4>>> s;
    for (const auto& e : elements) s.insert({e.dir.alpha, e.dir.beta});
    return s.size();
  }
};

// m-characteristics of a direction, positional per the matrix formulas
inline void m_values_z3(const Direction33& d, long& m0, long& m1, long& m2, long& m3) {
  CMatrixZ3 c = cmatrix(d);
  m0 = c.max_entry();
  m1 = 0;
  for (int j = 1; j <= 4; ++j) m1 = std::max({m1, c.at(j, 3), c.at(j, 4)});
  int k = c.at(1, 3) <= c.at(1, 4) ? 3 : 4;
  m2 = std::max({c.at(1, 1), c.at(1, k), c.at(2, 2), c.at(2, k), c.at(3, 4), c.at(4, 4),
                 c.at(3, 3), c.at(4, 3)});
  m3 = std::min(m1, m2);
}

inline OrbitZ3 orbit_z3(const Direction33& d_in, OrbitMode mode = OrbitMode::full) {
  Direction33 d = d_in.shifted_to_zero();
  OrbitZ3 orb;
  orb.base = d;
  m_values_z3(d, orb.m0_char, orb.m1, orb.m2, orb.m3);

  auto push = [](std::vector<OrbitElementZ3>& v, const Direction33& x) {
    OrbitElementZ3 e;
    e.dir = x;
    CMatrixZ3 c = cmatrix(x);
    e.pi = pi_profile(c);
    e.admissible = c.admissible();
    v.push_back(e);
  };

  std::vector<Direction33> word_images;
  if (mode == OrbitMode::full) {
    for (const Word& w : coset_words_z3()) word_images.push_back(apply_word(w, d));
  } else {
    word_images.push_back(d);  // (a,b)-trivial action: row permutations only
  }
  for (const auto& img : word_images) push(orb.m0, img);

  std::array<int, 4> idx{0, 1, 2, 3};
  for (const auto& img : word_images) {
    std::array<int, 4> p = idx;
    std::sort(p.begin(), p.end());
    do {
      Direction33 x = img;
      for (int i = 0; i < 4; ++i) x.alpha[size_t(i)] = img.alpha[size_t(p[size_t(i)])];
      push(orb.elements, x);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return orb;
}

struct OrbitElementZ2 {
  Direction32 dir;
  std::array<long, 5> pi{};
  bool admissible = false;
};

struct OrbitZ2 {
  Direction32 base;
  std::vector<OrbitElementZ2> elements;  // the 60 images of G/G0
  long m0_char = 0, m1 = 0, m2 = 0, m3 = 0;

  size_t count_distinct() const {
    std::set<std::pair<std::array<long, 3>, std::array<long, 3>>> s;
    for (const auto& e : elements) s.insert({e.dir.alpha, e.dir.beta});
    return s.size();
  }
};

inline void m_values_z2(const Direction32& d, long& m0, long& m1, long& m2, long& m3) {
  CMatrixZ2 c = cmatrix(d);
  m0 = c.max_entry();
  std::array<long, 3> a = d.alpha;
  std::sort(a.begin(), a.end());
  long b_hi = std::max(d.beta[1], d.beta[2]);
  long b_lo2 = std::min(d.beta[1], d.beta[2]);
  m1 = b_hi - a[0];
  m2 = std::max({d.alpha[0] - d.beta[0], b_hi - d.alpha[1], b_hi - d.alpha[2], b_lo2 - a[0]});
  m3 = std::min(m1, m2);
}

// 60 coset representative words of G/G0, G0 = {id, a2 b} for z2,
// found by breadth-first closure with word tracking
inline const std::vector<WordZ2>& coset_words_z2() {
  static const std::vector<WordZ2> words = [] {
    using enum GenZ2;
    std::vector<std::pair<Perm, WordZ2>> all;
    std::map<Perm, WordZ2> seen;
    Perm id = perm_identity(10);
    seen[id] = {};
    all.push_back({id, {}});
    const std::array<GenZ2, 4> gens{A1, A2, B, H};
    for (size_t head = 0; head < all.size(); ++head) {
      auto [p, w] = all[head];
      for (GenZ2 g : gens) {
        Perm np = perm_compose(p, z2_perm(g));  // word extended on the right
        if (seen.count(np)) continue;
        WordZ2 nw = w;
        nw.push_back(g);
        seen[np] = nw;
        all.push_back({np, nw});
      }
    }
    // quotient by G0 = {id, a2 b} acting on the right
    Perm g0 = perm_compose(z2_perm(B), z2_perm(A2));
    std::set<Perm> used;
    std::vector<WordZ2> reps;
    for (const auto& [p, w] : all) {
      if (used.count(p)) continue;
      used.insert(p);
      used.insert(perm_compose(p, g0));
      reps.push_back(w);
    }
    return reps;
  }();
  return words;
}

inline OrbitZ2 orbit_z2(const Direction32& d_in) {
  Direction32 d = d_in.shifted_to_zero();
  OrbitZ2 orb;
  orb.base = d;
  m_values_z2(d, orb.m0_char, orb.m1, orb.m2, orb.m3);
  for (const WordZ2& w : coset_words_z2()) {
    OrbitElementZ2 e;
    e.dir = apply_word(w, d);
    CMatrixZ2 c = cmatrix(e.dir);
    e.pi = pi_profile(c);
    e.admissible = c.admissible();
    orb.elements.push_back(e);
  }
  return orb;
}

// ---------------------------------------------------------------------------
// nu_p and Phi_n (exact Legendre valuations)

template <typename Orbit>
long nu_p(const Orbit& orb, long n, long p) {
  auto bp = pi_profile(cmatrix(orb.base));
  long base = 0;
  for (long v : bp) base += ord_p_factorial(v * n, p);
  long best = 0;
  for (const auto& e : orb.elements) {
    long other = 0;
    for (long v : e.pi) other += ord_p_factorial(v * n, p);
    best = std::max(best, base - other);
  }
  return best;
}

// log Phi_n as a double, for asymptotic checks at large n
template <typename Orbit>
double log_phi_n(const Orbit& orb, long n) {
  long lo_sq = orb.m0_char * n;
  long hi = orb.m3 * n;
  double s = 0;
  for (long p : prime_table().upto(hi)) {
    if (p * p <= lo_sq) continue;
    long e = nu_p(orb, n, p);
    if (e > 0) s += double(e) * std::log(double(p));
  }
  return s;
}

template <typename Orbit>
Int phi_n(const Orbit& orb, long n) {
  long lo_sq = orb.m0_char * n;  // primes p with p^2 > m0 n
  long hi = orb.m3 * n;
  Int phi = 1;
  for (long p : prime_table().upto(hi)) {
    if (p * p <= lo_sq) continue;
    long e = nu_p(orb, n, p);
    for (long i = 0; i < e; ++i) phi *= p;
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Stability (the quantity H(c)/Pi(c)) and the sharpened inclusion

inline Int pi_factorial(const std::array<long, 8>& pi, long n) {
  Int v = 1;
  for (long x : pi) v *= factorial(x * n);
  return v;
}

inline Int pi_factorial(const std::array<long, 5>& pi, long n) {
  Int v = 1;
  for (long x : pi) v *= factorial(x * n);
  return v;
}

// H(c' n)/Pi(c' n) as an exact linear form, for stability comparisons
inline LinearForm stability_form_z3(const Direction33& d, long n) {
  ParamSet33 p = d.at(n);
  LinearForm f = linear_form_z3(p);
  return f.scaled(Rational(1) / Rational(pi_factorial(pi_profile(cmatrix(d)), n)));
}

inline LinearForm stability_form_z2(const Direction32& d, long n) {
  ParamSet32 p = d.at(n);
  LinearForm f = linear_form_z2(p);
  return f.scaled(Rational(1) / Rational(pi_factorial(pi_profile(cmatrix(d)), n)));
}

struct InclusionReport {
  bool ok = false;
  Int multiplier = 1;   // D-product
  Int phi = 1;          // arithmetic correction divided out
  Rational a_scaled, b_scaled;
};

// sharpened inclusion for z3: D_{m1 n}^2 D_{m2 n} Phi_n^{-1} H(cn) in 2Z zeta(3) + Z
inline InclusionReport check_sharpened_z3(const OrbitZ3& orb, long n) {
  ParamSet33 p = orb.base.at(n);
  FormZ3 f = build_form_z3(p);
  InclusionReport r;
  r.phi = phi_n(orb, n);
  Int d1 = lcm_or_one(orb.m1 * n);
  Int d2 = lcm_or_one(orb.m2 * n);
  r.multiplier = d1 * d1 * d2;
  Rational scale = Rational(r.multiplier) / Rational(r.phi);
  r.a_scaled = Rational(f.A) * scale;
  r.b_scaled = f.B * scale;
  r.ok = is_integer(r.a_scaled) && is_integer(r.b_scaled);
  return r;
}

inline InclusionReport check_sharpened_z2(const OrbitZ2& orb, long n) {
  ParamSet32 p = orb.base.at(n);
  FormZ2 f = build_form_z2(p);
  InclusionReport r;
  r.phi = phi_n(orb, n);
  r.multiplier = lcm_or_one(orb.m1 * n) * lcm_or_one(orb.m2 * n);
  Rational scale = Rational(r.multiplier) / Rational(r.phi);
  r.a_scaled = Rational(f.A) * scale;
  r.b_scaled = f.B * scale;
  r.ok = is_integer(r.a_scaled) && is_integer(r.b_scaled);
  return r;
}

}  // namespace zf
