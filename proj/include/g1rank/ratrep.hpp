#ifndef G1RANK_RATREP_HPP
#define G1RANK_RATREP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g1rank/chartab.hpp"

namespace g1rank {

/// An abelian number field presented as the fixed field of a subgroup H
/// of (Z/n)^x inside Q(zeta_n). degree = [E : Q] = phi(n)/|H|.
struct AbelianFieldDescriptor {
  int64_t level = 1;
  std::vector<int64_t> stabilizer;  // sorted residues mod level
  int64_t degree = 1;
  bool totally_real = true;

  /// Compact rendering like "Q", "Q(z3)" or "Q(z5)+", using the
  /// conductor (smallest cyclotomic field containing E).
  std::string str() const;
};

/// A rational irreducible representation = Galois orbit of complex
/// irreducible characters, with the derived data the rank formulas use.
struct RationalIrrep {
  std::vector<int> orbit;  // character indices into the table
  int representative = 0;  // index of the canonical orbit member
  int64_t kernel_order = 1;
  int64_t complex_degree = 1;
  int64_t omega = 1;
  AbelianFieldDescriptor field;
  int64_t unit_rank = 0;
  int64_t v = 0;                         // primes of O above p | |G|
  int64_t w = 0;                         // primes of O above p | omega
  std::map<int64_t, int64_t> t_by_prime; // p -> t_rho, for p | |G|
};

/// H = {t in (Z/n)^x : sigma_t fixes every value of chi}.
std::vector<int64_t> galois_stabilizer(const Character& chi, int64_t n);

/// Orbits of chi -> sigma_t o chi on the table's characters; sorted by
/// (degree of representative, rendered values of representative).
std::vector<std::vector<int>> galois_orbits(const CharacterTable& tab);

/// Sum of class sizes over classes where chi(g) = chi(e), by exact
/// equality.
int64_t kernel_order(const Character& chi, const ClassData& cd);

/// |G| / (k * d); the quotient is an integer for kernel order k and
/// constituent degree d of an irreducible (throws NonIntegerOmega
/// otherwise, which means an upstream bug).
int64_t omega(int64_t group_order, int64_t kernel, int64_t complex_degree);

AbelianFieldDescriptor field_descriptor(const Character& chi, int64_t n);

/// Descriptor for the fixed field of an explicitly given subgroup of
/// (Z/n)^x (validated: closed under multiplication, contains 1).
AbelianFieldDescriptor field_from_stabilizer(int64_t level,
                                             std::vector<int64_t> subgroup);

/// Dirichlet unit rank of the ring of integers: m-1 for totally real
/// fields, m/2 - 1 for totally complex ones.
int64_t unit_rank(const AbelianFieldDescriptor& field);

/// All orbits with kernel/degree/omega/field/unit_rank filled in
/// (v, w, t_by_prime are filled by the splitting layer).
std::vector<RationalIrrep> rational_irreps(const CharacterTable& tab);

}  // namespace g1rank

#endif
