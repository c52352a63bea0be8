#ifndef G1RANK_SPLITTING_HPP
#define G1RANK_SPLITTING_HPP

#include <cstdint>
#include <vector>

#include "g1rank/cyclo.hpp"
#include "g1rank/fppoly.hpp"
#include "g1rank/ratrep.hpp"

namespace g1rank {

/// How the rational prime p behaves in Q(zeta_n), described inside
/// Gal(Q(zeta_n)/Q) = (Z/n)^x. With n = p^a * m, p coprime to m:
/// inertia = {t : t = 1 mod m}, frobenius f = p mod m and 1 mod p^a,
/// decomposition = <inertia, frobenius>.
struct DecompositionData {
  int64_t prime = 2;
  int64_t level = 1;
  std::vector<int64_t> inertia;        // sorted
  int64_t frobenius = 1;
  std::vector<int64_t> decomposition;  // sorted
};

DecompositionData decomposition_data(int64_t n, int64_t p);

/// Subgroup of (Z/n)^x generated by the given units (sorted residues);
/// throws NotAUnit if a generator is not coprime to n.
std::vector<int64_t> unit_subgroup(int64_t n,
                                   const std::vector<int64_t>& generators);

/// Number of primes of the fixed field of H above p: the index
/// [(Z/n)^x : D*H].
int64_t primes_above_count(const AbelianFieldDescriptor& field, int64_t p);

/// Sum of primes_above_count over the distinct prime divisors of N;
/// 0 when N = 1.
int64_t count_primes_dividing(const AbelianFieldDescriptor& field, int64_t N);

/// e/f/g data of p in the fixed field of H: ramification index,
/// residue degree, number of primes. e * f * g = field degree.
struct SplitShape {
  int64_t ramification = 1;
  int64_t residue_degree = 1;
  int64_t primes = 1;
};
SplitShape split_shape(const AbelianFieldDescriptor& field, int64_t p);

/// Test oracle: the number of distinct irreducible factors of a monic
/// integer polynomial mod p (Dedekind's criterion counts primes above p
/// this way when Z[alpha] is integrally closed).
int64_t dedekind_factor_count_oracle(const IntPolynomial& f, int64_t p);

}  // namespace g1rank

#endif
