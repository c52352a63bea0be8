#ifndef G1RANK_FPPOLY_HPP
#define G1RANK_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "g1rank/cyclo.hpp"

namespace g1rank {

/// Dense polynomial over F_p, lowest degree first, coefficients in
/// [0, p), no trailing zeros.
struct FpPoly {
  int64_t p;
  std::vector<int64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

FpPoly fp_from_int_poly(const IntPolynomial& f, int64_t p);
FpPoly fp_poly(int64_t p, std::vector<int64_t> coeffs);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);  // monic
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b);
FpPoly fp_derivative(const FpPoly& a);
/// base^e mod m, e >= 0.
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);

/// Distinct monic irreducible factors, via squarefree decomposition,
/// then distinct-degree and equal-degree (Cantor-Zassenhaus, with a
/// deterministic sweep of split candidates) factorization.
std::vector<FpPoly> fp_distinct_irreducible_factors(const FpPoly& f);

/// All roots in F_p of a squarefree polynomial that splits into linear
/// factors over F_p, in increasing order.
std::vector<int64_t> fp_roots_of_split_squarefree(const FpPoly& f);

}  // namespace g1rank

#endif
