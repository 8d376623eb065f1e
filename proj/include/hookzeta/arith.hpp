#pragma once

#include <cstdint>
#include <vector>

#include "hookzeta/error.hpp"

namespace hookzeta {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

/// Exponent of the prime p in m (m != 0).
inline int valuation(long m, long p) {
  int v = 0;
  while (m != 0 && m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

/// Throws Error(InvalidInput) on overflow; see int_pow for big results.
inline long ipow(long base, int exp) {
  long r = 1;
  while (exp-- > 0)
    if (__builtin_mul_overflow(r, base, &r)) throw Error(ErrorKind::InvalidInput, "integer power overflows");
  return r;
}

/// Positive divisors in increasing order.
inline std::vector<long> divisors(long m) {
  std::vector<long> out;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

/// Distinct prime divisors in increasing order.
inline std::vector<long> prime_divisors(long m) {
  std::vector<long> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace hookzeta
