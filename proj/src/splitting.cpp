#include "g1rank/splitting.hpp"

#include <algorithm>
#include <set>

#include "g1rank/errors.hpp"
#include "g1rank/numeric.hpp"

namespace g1rank {

namespace {

// Subgroup of (Z/n)^x generated by a set of units; returns sorted
// residues.
std::vector<int64_t> generated_subgroup(int64_t n,
                                        const std::vector<int64_t>& gens) {
  int64_t identity = 1 % n;
  std::set<int64_t> seen{identity};
  std::vector<int64_t> frontier{identity};
  while (!frontier.empty()) {
    int64_t x = frontier.back();
    frontier.pop_back();
    for (int64_t g : gens) {
      int64_t y = n == 1 ? 0 : mulmod(x, g % n, n);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int64_t> subgroup_product(int64_t n, const std::vector<int64_t>& a,
                                      const std::vector<int64_t>& b) {
  std::set<int64_t> prod;
  for (int64_t x : a)
    for (int64_t y : b) prod.insert(n == 1 ? 0 : mulmod(x, y, n));
  return {prod.begin(), prod.end()};
}

}  // namespace

std::vector<int64_t> unit_subgroup(int64_t n,
                                   const std::vector<int64_t>& generators) {
  if (n < 1) throw BadSpec("level must be >= 1");
  std::vector<int64_t> gens;
  for (int64_t g : generators) {
    int64_t r = g % n;
    if (r < 0) r += n;
    if (std::gcd(r, n) != 1)
      throw NotAUnit(std::to_string(g) + " is not a unit mod " +
                     std::to_string(n));
    gens.push_back(r);
  }
  return generated_subgroup(n, gens);
}

DecompositionData decomposition_data(int64_t n, int64_t p) {
  if (n < 1) throw BadSpec("level must be >= 1");
  if (!is_prime(p)) throw BadSpec("p must be prime");
  DecompositionData d;
  d.prime = p;
  d.level = n;
  int64_t pa = 1;
  int64_t m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  // inertia: units congruent to 1 mod m
  for (int64_t t = 0; t < n; ++t)
    if (std::gcd(t, n) == 1 && t % m == 1 % m) d.inertia.push_back(t);
  if (d.inertia.empty()) d.inertia.push_back(0);  // n = 1
  d.frobenius = n == 1 ? 0 : crt(p % m, m, 1 % pa, pa);
  std::vector<int64_t> gens = d.inertia;
  gens.push_back(d.frobenius);
  d.decomposition = generated_subgroup(n, gens);
  return d;
}

int64_t primes_above_count(const AbelianFieldDescriptor& field, int64_t p) {
  DecompositionData d = decomposition_data(field.level, p);
  std::vector<int64_t> dh =
      subgroup_product(field.level, d.decomposition, field.stabilizer);
  int64_t phi = euler_phi(field.level);
  if (phi % static_cast<int64_t>(dh.size()) != 0)
    throw InternalError("D*H size does not divide phi(n)");
  return phi / static_cast<int64_t>(dh.size());
}

int64_t count_primes_dividing(const AbelianFieldDescriptor& field,
                              int64_t N) {
  if (N < 1) throw BadSpec("count_primes_dividing: N must be >= 1");
  int64_t total = 0;
  for (int64_t p : prime_divisors(N)) total += primes_above_count(field, p);
  return total;
}

SplitShape split_shape(const AbelianFieldDescriptor& field, int64_t p) {
  DecompositionData d = decomposition_data(field.level, p);
  int64_t n = field.level;
  std::vector<int64_t> ih = subgroup_product(n, d.inertia, field.stabilizer);
  std::vector<int64_t> dh =
      subgroup_product(n, d.decomposition, field.stabilizer);
  SplitShape s;
  int64_t h = static_cast<int64_t>(field.stabilizer.size());
  s.ramification = static_cast<int64_t>(ih.size()) / h;
  s.residue_degree =
      static_cast<int64_t>(dh.size()) / static_cast<int64_t>(ih.size());
  s.primes = euler_phi(n) / static_cast<int64_t>(dh.size());
  return s;
}

int64_t dedekind_factor_count_oracle(const IntPolynomial& f, int64_t p) {
  if (poly_degree(f) < 1) throw NotMonic("polynomial must be nonconstant");
  if (f.back() != 1) throw NotMonic("polynomial must be monic");
  FpPoly fp = fp_from_int_poly(f, p);
  return static_cast<int64_t>(fp_distinct_irreducible_factors(fp).size());
}

}  // namespace g1rank
