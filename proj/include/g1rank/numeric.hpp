#ifndef G1RANK_NUMERIC_HPP
#define G1RANK_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <vector>

namespace g1rank {

// Exact arithmetic carriers. All pipeline math is exact; there is no
// floating point anywhere in this library.
using Int = mpz_class;
using Rat = mpq_class;

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

// a*b mod m for m < 2^62.
inline int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

inline int64_t powmod(int64_t base, int64_t exp, int64_t m) {
  int64_t r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Modular inverse via extended Euclid; m need not be prime but
// gcd(a, m) must be 1.
int64_t invmod(int64_t a, int64_t m);

bool is_prime(int64_t n);

// Distinct prime divisors in increasing order.
std::vector<int64_t> prime_divisors(int64_t n);

// Full factorization as (prime, exponent) pairs, increasing primes.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

int64_t euler_phi(int64_t n);

// x with x = r1 (mod m1), x = r2 (mod m2); m1, m2 coprime.
int64_t crt(int64_t r1, int64_t m1, int64_t r2, int64_t m2);

}  // namespace g1rank

#endif
