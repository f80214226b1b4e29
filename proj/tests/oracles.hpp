#pragma once

// Brute-force reference routes used by the test suites. Everything here is
// exhaustive search in plain 64-bit arithmetic, kept independent of the
// library's factorization / Tonelli-Shanks / CRT path on purpose.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// squares[x] = true iff x is a square of a unit mod n.
inline std::vector<char> unit_square_table(u64 n) {
  std::vector<char> table(n == 0 ? 1 : n, 0);
  if (n == 1) {
    table[0] = 1;
    return table;
  }
  for (u64 r = 1; r < n; ++r)
    if (gcd_u64(r, n) == 1) table[(r * r) % n] = 1;
  return table;
}

// Legendre symbol by exhaustion of squares mod the odd prime p.
inline int legendre_brute(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  for (u64 r = 1; r < p; ++r)
    if ((r * r) % p == a) return 1;
  return -1;
}

// Is lambda = +-tau^2 (mod n) for a unit tau?
inline bool standard_brute(u64 n, u64 lambda) {
  if (n == 1) return true;
  lambda %= n;
  for (u64 tau = 1; tau < n; ++tau) {
    if (gcd_u64(tau, n) != 1) continue;
    u64 square = (tau * tau) % n;
    if (square == lambda || (n - square) % n == lambda) return true;
  }
  return false;
}

// Orbit count of the unit group under multiplication by unit squares and -1.
inline u64 square_class_count_brute(u64 n) {
  if (n == 1) return 1;
  std::vector<char> seen(n, 0);
  u64 classes = 0;
  for (u64 lambda = 1; lambda < n; ++lambda) {
    if (gcd_u64(lambda, n) != 1 || seen[lambda]) continue;
    ++classes;
    for (u64 u = 1; u < n; ++u) {
      if (gcd_u64(u, n) != 1) continue;
      u64 moved = (u * u) % n * lambda % n;
      seen[moved] = 1;
      seen[(n - moved) % n] = 1;
    }
  }
  return classes;
}

// All primes up to limit, by sieve.
inline std::vector<u64> primes_up_to(u64 limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<u64> primes;
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (u64 q = p * p; q <= limit; q += p) composite[q] = 1;
  }
  return primes;
}

}  // namespace oracle
