#ifndef G1RANK_CHARTAB_HPP
#define G1RANK_CHARTAB_HPP

#include <cstdint>
#include <vector>

#include "g1rank/cyclo.hpp"
#include "g1rank/perm.hpp"

namespace g1rank {

/// One complex irreducible character: exact values per class, all at
/// level exp(G); degree = value at the identity class.
struct Character {
  std::vector<CycloNum> values;
  int64_t degree = 1;
};

struct CharacterTable {
  int64_t group_order = 1;
  int64_t group_exponent = 1;
  int64_t dixon_prime = 3;
  int64_t zeta_residue = 1;  // the exp(G)-th root of unity mod q used by
                             // the lift
  ClassData classes;
  std::vector<Character> characters;

  int class_count() const { return classes.count(); }
};

/// Character residues mod the Dixon prime, one row per character (in
/// eigenspace-splitting order; the lifted table is sorted later).
struct ModqTable {
  int64_t q = 3;
  int64_t e = 1;              // exp(G)
  int64_t zeta_residue = 1;   // primitive e-th root of unity mod q
  std::vector<int64_t> degrees;
  std::vector<std::vector<int64_t>> rows;
};

/// powers[c][r] = class index of representative(c)^r, r in [0, order(c)).
using ClassPowerTable = std::vector<std::vector<int>>;
ClassPowerTable build_class_power_table(const Group& g, const ClassData& cd);

/// Smallest prime q = 1 (mod e) with q > 2*floor(sqrt(order)).
int64_t dixon_prime(int64_t group_exponent, int64_t group_order);

/// Class-algebra structure constants for class i:
/// M[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}.
std::vector<std::vector<int64_t>> class_matrix(const Group& g,
                                               const ClassData& cd, int i);

/// Split the common eigenspaces of the class matrices over F_q and
/// normalize to character residues with true integer degrees.
ModqTable character_table_mod_q(const Group& g, const ClassData& cd);

/// Recover exact character values from residues by discrete Fourier
/// inversion on roots of unity mod q.
std::vector<Character> lift_character_values(const ModqTable& modq,
                                             const ClassData& cd,
                                             const ClassPowerTable& powers);

/// Full driver: classes, mod-q table, lift, canonical row order.
CharacterTable character_table(const Group& g);

}  // namespace g1rank

#endif
