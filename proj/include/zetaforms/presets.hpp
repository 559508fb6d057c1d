#pragma once

// Named parameter presets used across the CLI and the test suites.

#include "zetaforms/forms.hpp"
#include "zetaforms/groups.hpp"

namespace zf::presets {

inline ParamSet33 apery(long n) {
  return {{n + 1, n + 1, n + 1, n + 1}, {1, 1, 2 * n + 2, 2 * n + 2}};
}

inline ParamSet32 apery_z2(long n) {
  return {{n + 1, n + 1, n + 1}, {1, 2 * n + 2, 2 * n + 2}};
}

// the record zeta(3) direction
inline Direction33 rv_zeta3() { return {{18, 17, 16, 19}, {0, 7, 31, 32}}; }

// the record zeta(2) direction
inline Direction32 rv_zeta2() { return {{13, 12, 14}, {0, 24, 28}}; }

// the earlier zeta(3) record, used with the (a,b)-trivial orbit
inline Direction33 hata() { return {{8, 7, 8, 9}, {0, 1, 15, 16}}; }

// directions for the four-odd-zeta theorem: r=3, q=13
struct EtaPreset {
  long r, q;
  std::vector<long> eta;  // eta[0] = eta_0
};

inline EtaPreset theorem3() {
  EtaPreset p{3, 13, {91, 27, 27, 27}};
  for (long j = 4; j <= 13; ++j) p.eta.push_back(25 + j);
  return p;
}

// r=3, q=21, eta_0=20, eta_j=7: the eight-odd-zeta configuration
inline EtaPreset zu4_eight() {
  EtaPreset p{3, 21, {20}};
  for (long j = 1; j <= 21; ++j) p.eta.push_back(7);
  return p;
}

}  // namespace zf::presets
