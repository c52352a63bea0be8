#ifndef G1RANK_MODULAR_HPP
#define G1RANK_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "g1rank/perm.hpp"

namespace g1rank {

/// Berman data for one prime: the p-regular classes, the exponent group
/// T = {p^i mod d}, and the number of F_p-conjugacy classes after fusing
/// classes under powering by elements of T.
struct FpClassReport {
  int64_t prime = 2;
  std::vector<int> regular_class_indices;
  int64_t d = 1;                  // lcm of orders of p-regular elements
  std::vector<int64_t> exponent_group;  // T, sorted
  int64_t fused_class_count = 0;
};

/// By Berman's theorem the fused count equals the number of irreducible
/// F_p-representations of the group.
FpClassReport fp_class_report(const Group& g, const ClassData& cd, int64_t p);

/// epsilon = sum over primes p | |G| of the p-regular F_p-class count.
int64_t epsilon(const Group& g, const ClassData& cd);

}  // namespace g1rank

#endif
