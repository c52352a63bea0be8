#ifndef G1RANK_CYCLO_HPP
#define G1RANK_CYCLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g1rank/numeric.hpp"

namespace g1rank {

/// Integer polynomial, lowest degree first, canonical (no trailing
/// zeros; the zero polynomial is the empty list).
using IntPolynomial = std::vector<Int>;

int poly_degree(const IntPolynomial& p);  // -1 for the zero polynomial

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by all
/// Phi_d for proper divisors d | n.
IntPolynomial cyclotomic_polynomial(int64_t n);

/// An exact element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}
/// modulo Phi_n. The representation is canonical: equal values at equal
/// level have equal coefficient lists.
class CycloNum {
 public:
  CycloNum() = default;  // 0 at level 1
  /// The rational constant r at the given level.
  CycloNum(int64_t level, const Rat& r);

  static CycloNum zero(int64_t level);
  static CycloNum one(int64_t level);
  /// zeta_n^k, k any integer.
  static CycloNum root_of_unity(int64_t n, int64_t k);

  int64_t level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational value when all coordinates beyond the constant vanish.
  std::optional<Rat> as_rational() const;

  CycloNum operator+(const CycloNum& rhs) const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum operator-(const CycloNum& rhs) const;
  CycloNum operator-() const;
  CycloNum operator*(const CycloNum& rhs) const;
  /// Canonical form makes equality coefficientwise; throws LevelMismatch
  /// for operands at different levels (callers lift first).
  bool operator==(const CycloNum& rhs) const;

  /// Image under the automorphism zeta_n -> zeta_n^t; gcd(t, n) must be
  /// 1 (throws NotAUnit otherwise).
  CycloNum galois_apply(int64_t t) const;

  /// Same value at level m, for level() | m (zeta_n = zeta_m^{m/n}).
  CycloNum lift_to_level(int64_t m) const;

  /// The same value at the smallest cyclotomic level containing it, so
  /// cube roots of unity sitting at level 12 come back as level-3
  /// numbers. Used for display; the canonical form stays per-level.
  CycloNum reduced() const;

  /// Deterministic rendering, e.g. "-1 + 2*z12^3"; rational values render
  /// as plain rationals.
  std::string str() const;

 private:
  int64_t level_ = 1;
  std::vector<Rat> coeffs_ = {Rat(0)};
};

}  // namespace g1rank

#endif
