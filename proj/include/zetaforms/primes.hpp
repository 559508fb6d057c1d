#pragma once

// Prime sieve with on-demand extension, D_N = lcm(1..N), and Legendre's
// formula for the p-adic valuation of factorials.

#include "zetaforms/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace zf {

class PrimeTable {
 public:
  explicit PrimeTable(long limit = 1024) { extend(limit); }

  // Ensures the table covers all primes <= limit.
  void extend(long limit) {
    if (limit <= limit_) return;
    limit = std::max(limit, 2 * limit_);
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    primes_.clear();
    for (long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (long j = i * i; j <= limit && j > 0; j += i) composite[j] = true;
    }
    limit_ = limit;
  }

  bool is_prime(long n) {
    if (n < 2) return false;
    extend(n);
    return std::binary_search(primes_.begin(), primes_.end(), n);
  }

  // Primes p with lo < p <= hi.
  std::vector<long> in_range(long lo, long hi) {
    if (hi < 2) return {};
    extend(hi);
    std::vector<long> out;
    auto it = std::upper_bound(primes_.begin(), primes_.end(), lo);
    for (; it != primes_.end() && *it <= hi; ++it) out.push_back(*it);
    return out;
  }

  std::vector<long> upto(long hi) { return in_range(1, hi); }

  long limit() const { return limit_; }

 private:
  long limit_ = 0;
  std::vector<long> primes_;
};

inline PrimeTable& prime_table() {
  thread_local PrimeTable table;
  return table;
}

// ord_p of D_N = lcm(1..N): the largest e with p^e <= N.
inline long ord_p_lcm(long n, long p) {
  long e = 0;
  long pe = 1;
  while (pe <= n / p) {
    pe *= p;
    ++e;
  }
  return e;
}

// D_N = lcm(1,...,N) as prod over primes p <= N of p^floor(log_p N).
inline Int lcm_upto(long n) {
  if (n < 1) throw std::domain_error("lcm_upto requires N >= 1");
  Int d = 1;
  for (long p : prime_table().upto(n)) {
    Int pe = p;
    while (pe * p <= n) pe *= p;
    d *= pe;
  }
  return d;
}

// Legendre: ord_p(N!) = sum_i floor(N/p^i).
inline long ord_p_factorial(long n, long p) {
  long v = 0;
  while (n > 0) {
    n /= p;
    v += n;
  }
  return v;
}

}  // namespace zf
