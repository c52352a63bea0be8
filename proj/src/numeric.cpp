#include "g1rank/numeric.hpp"

#include "g1rank/errors.hpp"

namespace g1rank {

int64_t invmod(int64_t a, int64_t m) {
  int64_t t = 0, new_t = 1;
  int64_t r = m, new_r = a % m;
  if (new_r < 0) new_r += m;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InternalError("invmod: argument not invertible");
  return t < 0 ? t + m : t;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> ps;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

int64_t euler_phi(int64_t n) {
  int64_t phi = n;
  for (int64_t p : prime_divisors(n)) phi -= phi / p;
  return phi;
}

int64_t crt(int64_t r1, int64_t m1, int64_t r2, int64_t m2) {
  // x = r1 + m1 * k with k = (r2 - r1) / m1 mod m2
  int64_t k = (r2 - r1) % m2;
  if (k < 0) k += m2;
  k = mulmod(k, invmod(m1 % m2, m2), m2);
  return r1 + m1 * k;
}

}  // namespace g1rank
