#pragma once

// The printed stratification intervals for the four-odd-zeta direction
// (r=3, q=13, eta = 91; 27,27,27, 29..38): Omega_1 = Omega_2, and
// phi(x) = v exactly when x lies in Omega_v \ Omega_{v+1}, Omega_10
// empty.  Each row is {num_lo, den_lo, num_hi, den_hi, level}.

#include <array>
#include <cstdint>
#include <vector>

namespace zf::test {

struct OmegaInterval {
  long nlo, dlo, nhi, dhi;
  int level;
};

inline const std::vector<OmegaInterval>& omega_intervals() {
  static const std::vector<OmegaInterval> table = {
      // Omega_1 = Omega_2
      {2, 91, 36, 37, 2},
      {90, 91, 1, 1, 2},
      // Omega_3
      {2, 91, 1, 20, 3},
      {5, 91, 3, 4, 3},
      {28, 37, 13, 14, 3},
      {14, 15, 35, 37, 3},
      {18, 19, 27, 28, 3},
      {88, 91, 36, 37, 3},
      {90, 91, 1, 1, 3},
      // Omega_4
      {1, 38, 1, 22, 4},
      {5, 91, 3, 26, 4},
      {2, 17, 1, 8, 4},
      {4, 31, 4, 27, 4},
      {5, 33, 7, 30, 4},
      {4, 17, 12, 37, 4},
      {30, 91, 1, 3, 4},
      {31, 91, 3, 8, 4},
      {14, 37, 11, 28, 4},
      {13, 33, 9, 22, 4},
      {7, 17, 13, 28, 4},
      {8, 17, 1, 2, 4},
      {19, 37, 9, 14, 4},
      {20, 31, 2, 3, 4},
      {21, 31, 3, 4, 4},
      {25, 33, 11, 14, 4},
      {26, 33, 23, 28, 4},
      {14, 17, 23, 27, 4},
      {31, 36, 25, 27, 4},
      {85, 91, 35, 37, 4},
      {20, 21, 26, 27, 4},
      {32, 33, 34, 35, 4},
      // Omega_5
      {1, 37, 1, 27, 5},
      {1, 25, 1, 24, 5},
      {5, 91, 1, 18, 5},
      {2, 35, 2, 27, 5},
      {3, 38, 1, 12, 5},
      {8, 91, 3, 34, 5},
      {2, 21, 1, 9, 5},
      {4, 33, 1, 8, 5},
      {5, 38, 4, 27, 5},
      {3, 19, 1, 6, 5},
      {5, 29, 5, 27, 5},
      {4, 21, 5, 26, 5},
      {6, 29, 2, 9, 5},
      {5, 21, 7, 27, 5},
      {4, 15, 10, 37, 5},
      {2, 7, 3, 10, 5},
      {7, 23, 4, 13, 5},
      {6, 19, 12, 37, 5},
      {30, 91, 1, 3, 5},
      {10, 29, 7, 20, 5},
      {13, 37, 5, 14, 5},
      {33, 91, 3, 8, 5},
      {8, 21, 5, 13, 5},
      {13, 33, 11, 27, 5},
      {12, 29, 5, 12, 5},
      {8, 19, 11, 26, 5},
      {14, 33, 13, 30, 5},
      {40, 91, 4, 9, 5},
      {5, 11, 11, 24, 5},
      {17, 37, 6, 13, 5},
      {17, 36, 13, 27, 5},
      {16, 33, 1, 2, 5},
      {16, 31, 14, 27, 5},
      {8, 15, 19, 35, 5},
      {17, 31, 5, 9, 5},
      {19, 33, 15, 26, 5},
      {18, 31, 16, 27, 5},
      {20, 33, 17, 28, 5},
      {19, 31, 17, 27, 5},
      {11, 17, 2, 3, 5},
      {17, 25, 15, 22, 5},
      {20, 29, 19, 27, 5},
      {12, 17, 17, 24, 5},
      {21, 29, 20, 27, 5},
      {23, 31, 3, 4, 5},
      {69, 91, 7, 9, 5},
      {15, 19, 19, 24, 5},
      {4, 5, 22, 27, 5},
      {14, 17, 23, 27, 5},
      {25, 29, 19, 22, 5},
      {27, 31, 7, 8, 5},
      {29, 33, 8, 9, 5},
      {26, 29, 9, 10, 5},
      {28, 31, 25, 27, 5},
      {31, 33, 35, 37, 5},
      {87, 91, 26, 27, 5},
      {32, 33, 33, 34, 5},
      // Omega_6
      {1, 36, 1, 27, 6},
      {1, 17, 2, 27, 6},
      {9, 91, 4, 37, 6},
      {10, 91, 1, 9, 6},
      {12, 91, 4, 27, 6},
      {16, 91, 5, 27, 6},
      {19, 91, 8, 37, 6},
      {5, 23, 2, 9, 6},
      {7, 29, 9, 37, 6},
      {23, 91, 7, 27, 6},
      {2, 7, 8, 27, 6},
      {29, 91, 12, 37, 6},
      {30, 91, 1, 3, 6},
      {33, 91, 10, 27, 6},
      {15, 38, 11, 27, 6},
      {3, 7, 16, 37, 6},
      {40, 91, 4, 9, 6},
      {9, 19, 13, 27, 6},
      {47, 91, 14, 27, 6},
      {7, 13, 20, 37, 6},
      {50, 91, 5, 9, 6},
      {53, 91, 16, 27, 6},
      {8, 13, 23, 37, 6},
      {57, 91, 17, 27, 6},
      {59, 91, 24, 37, 6},
      {15, 23, 17, 26, 6},
      {23, 35, 2, 3, 6},
      {9, 13, 26, 37, 6},
      {64, 91, 19, 27, 6},
      {66, 91, 19, 26, 6},
      {67, 91, 20, 27, 6},
      {13, 17, 7, 9, 6},
      {4, 5, 22, 27, 6},
      {76, 91, 31, 37, 6},
      {16, 19, 23, 27, 6},
      {29, 33, 8, 9, 6},
      {31, 34, 34, 37, 6},
      {23, 25, 25, 27, 6},
      {31, 33, 33, 35, 6},
      {87, 91, 26, 27, 6},
      // Omega_7
      {1, 33, 1, 27, 7},
      {1, 17, 2, 27, 7},
      {9, 91, 4, 37, 7},
      {10, 91, 1, 9, 7},
      {12, 91, 5, 37, 7},
      {1, 7, 4, 27, 7},
      {16, 91, 5, 27, 7},
      {19, 91, 8, 37, 7},
      {20, 91, 2, 9, 7},
      {22, 91, 9, 37, 7},
      {9, 35, 7, 27, 7},
      {2, 7, 8, 27, 7},
      {29, 91, 9, 28, 7},
      {10, 31, 11, 34, 7},
      {33, 91, 10, 27, 7},
      {36, 91, 15, 37, 7},
      {37, 91, 11, 27, 7},
      {3, 7, 16, 37, 7},
      {40, 91, 4, 9, 7},
      {10, 21, 13, 27, 7},
      {47, 91, 14, 27, 7},
      {7, 13, 20, 37, 7},
      {50, 91, 5, 9, 7},
      {53, 91, 16, 27, 7},
      {8, 13, 23, 37, 7},
      {57, 91, 17, 27, 7},
      {59, 91, 24, 37, 7},
      {9, 13, 26, 37, 7},
      {64, 91, 19, 27, 7},
      {66, 91, 27, 37, 7},
      {67, 91, 20, 27, 7},
      {10, 13, 7, 9, 7},
      {73, 91, 30, 37, 7},
      {74, 91, 22, 27, 7},
      {11, 13, 23, 27, 7},
      {80, 91, 8, 9, 7},
      {83, 91, 34, 37, 7},
      {12, 13, 25, 27, 7},
      {87, 91, 26, 27, 7},
      // Omega_8
      {1, 31, 1, 27, 8},
      {6, 91, 2, 27, 8},
      {9, 91, 1, 10, 8},
      {3, 29, 4, 37, 8},
      {10, 91, 1, 9, 8},
      {2, 15, 5, 37, 8},
      {1, 7, 4, 27, 8},
      {3, 17, 5, 28, 8},
      {7, 38, 5, 27, 8},
      {7, 33, 8, 37, 8},
      {20, 91, 2, 9, 8},
      {8, 33, 9, 37, 8},
      {9, 31, 7, 24, 8},
      {5, 17, 8, 27, 8},
      {4, 11, 10, 27, 8},
      {37, 91, 11, 27, 8},
      {11, 23, 13, 27, 8},
      {7, 13, 20, 37, 8},
      {16, 29, 5, 9, 8},
      {53, 91, 7, 12, 8},
      {17, 29, 16, 27, 8},
      {13, 21, 23, 37, 8},
      {23, 33, 7, 10, 8},
      {64, 91, 19, 27, 8},
      {14, 19, 20, 27, 8},
      {10, 13, 27, 35, 8},
      {25, 31, 30, 37, 8},
      {74, 91, 22, 27, 8},
      {11, 13, 23, 27, 8},
      {80, 91, 31, 35, 8},
      {83, 91, 11, 12, 8},
      {12, 13, 25, 27, 8},
      {22, 23, 26, 27, 8},
      // Omega_9
      {1, 29, 1, 28, 9},
      {2, 29, 1, 14, 9},
      {7, 19, 10, 27, 9},
      {12, 25, 13, 27, 9},
      {17, 23, 20, 27, 9},
      {15, 17, 23, 26, 9},
      {24, 25, 25, 26, 9},
  };
  return table;
}

// phi value the printed stratification assigns to x: the largest level
// whose union contains x (level 1 coincides with level 2)
template <typename Rat>
int printed_phi(const Rat& x) {
  int best = 0;
  for (const auto& iv : omega_intervals()) {
    if (x >= Rat(iv.nlo) / Rat(iv.dlo) && x < Rat(iv.nhi) / Rat(iv.dhi))
      best = std::max(best, iv.level);
  }
  return best;
}

}  // namespace zf::test
