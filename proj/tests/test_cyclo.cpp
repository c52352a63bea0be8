#include <doctest.h>

#include <cstdint>

#include "g1rank/cyclo.hpp"
#include "g1rank/errors.hpp"

using namespace g1rank;

namespace {

// tiny deterministic generator for property samples (no float anywhere)
struct Lcg {
  uint64_t state = 0x2545F4914F6CDD1Dull;
  uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  CycloNum value(int64_t level) {
    CycloNum v = CycloNum::zero(level);
    int terms = 1 + static_cast<int>(next() % 3);
    for (int t = 0; t < terms; ++t) {
      int64_t c = static_cast<int64_t>(next() % 7) - 3;
      v = v + CycloNum(level, Rat(c)) *
                  CycloNum::root_of_unity(level,
                                          static_cast<int64_t>(next()));
    }
    return v;
  }
};

IntPolynomial poly(std::initializer_list<long> coeffs) {
  IntPolynomial p;
  for (long c : coeffs) p.push_back(Int(c));
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
  CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
  // first index with a coefficient outside {-1,0,1}
  IntPolynomial f105 = cyclotomic_polynomial(105);
  CHECK(f105[7] == -2);
}

TEST_CASE("product of cyclotomics is x^n - 1") {
  for (int64_t n = 1; n <= 48; ++n) {
    CAPTURE(n);
    IntPolynomial prod = poly({1});
    for (int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      IntPolynomial f = cyclotomic_polynomial(d);
      IntPolynomial next(prod.size() + f.size() - 1, Int(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
      prod = std::move(next);
    }
    REQUIRE(poly_degree(prod) == n);
    CHECK(prod[0] == -1);
    CHECK(prod[n] == 1);
    for (int64_t i = 1; i < n; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("roots of unity") {
  CHECK(CycloNum::root_of_unity(1, 0) == CycloNum::one(1));
  CHECK(CycloNum::root_of_unity(4, 1) * CycloNum::root_of_unity(4, 1) ==
        -CycloNum::one(4));
  // zeta_3 + zeta_3^2 = -1
  CycloNum z3 = CycloNum::root_of_unity(3, 1);
  CycloNum z3sq = CycloNum::root_of_unity(3, 2);
  CHECK(z3 + z3sq == CycloNum(3, Rat(-1)));
  CHECK(z3 * z3sq == CycloNum::one(3));
  // (1 + z3)(1 + z3^2) = 1
  CycloNum one3 = CycloNum::one(3);
  CHECK((one3 + z3) * (one3 + z3sq) == one3);

  for (int64_t n : {1, 2, 3, 4, 6, 8, 12, 15}) {
    for (int64_t k = 0; k < n; ++k) {
      CycloNum z = CycloNum::root_of_unity(n, k);
      CycloNum power = CycloNum::one(n);
      for (int64_t i = 0; i < n; ++i) power = power * z;
      CHECK(power == CycloNum::one(n));
    }
  }
}

TEST_CASE("arithmetic basics") {
  CycloNum a = CycloNum::root_of_unity(12, 5) + CycloNum(12, Rat(2));
  CHECK(a + CycloNum::zero(12) == a);
  CHECK(a - a == CycloNum::zero(12));
  CHECK(a * CycloNum::one(12) == a);
  CHECK_THROWS_AS(a + CycloNum::one(3), LevelMismatch);
  CHECK_THROWS_AS((void)(a == CycloNum::one(3)), LevelMismatch);
}

TEST_CASE("ring axioms on pseudo-random samples") {
  for (int64_t level : {3, 8, 12, 15}) {
    CAPTURE(level);
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
      CycloNum a = rng.value(level);
      CycloNum b = rng.value(level);
      CycloNum c = rng.value(level);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (b + c) == (a + b) + c);
    }
  }
}

TEST_CASE("galois action") {
  CycloNum z3 = CycloNum::root_of_unity(3, 1);
  CHECK(z3.galois_apply(1) == z3);
  CHECK(z3.galois_apply(2) == CycloNum::root_of_unity(3, 2));

  CycloNum z12 = CycloNum::root_of_unity(12, 1);
  CHECK(z12.galois_apply(5).galois_apply(5) == z12);  // 5^2 = 1 mod 12
  CHECK_THROWS_AS(z12.galois_apply(4), NotAUnit);

  // homomorphism properties, exact, on samples
  Lcg rng;
  for (int trial = 0; trial < 15; ++trial) {
    CycloNum a = rng.value(12);
    CycloNum b = rng.value(12);
    for (int64_t t : {5, 7, 11}) {
      CHECK((a + b).galois_apply(t) == a.galois_apply(t) + b.galois_apply(t));
      CHECK((a * b).galois_apply(t) == a.galois_apply(t) * b.galois_apply(t));
    }
    for (int64_t s : {5, 7, 11})
      for (int64_t t : {5, 7, 11})
        CHECK(a.galois_apply(s).galois_apply(t) ==
              a.galois_apply(s * t % 12));
  }
}

TEST_CASE("as_rational") {
  CHECK(CycloNum::one(12).as_rational() == Rat(1));
  CHECK(!CycloNum::root_of_unity(3, 1).as_rational().has_value());
  CycloNum sum = CycloNum::root_of_unity(3, 1) + CycloNum::root_of_unity(3, 2);
  CHECK(sum.as_rational() == Rat(-1));
}

TEST_CASE("lift to a larger level") {
  CycloNum z3 = CycloNum::root_of_unity(3, 1);
  CHECK(z3.lift_to_level(12) == CycloNum::root_of_unity(12, 4));
  CHECK(CycloNum(3, Rat(5, 2)).lift_to_level(12) == CycloNum(12, Rat(5, 2)));
  CHECK_THROWS_AS(z3.lift_to_level(8), LevelMismatch);
  // lifting respects multiplication
  CycloNum a = z3 + CycloNum::one(3);
  CycloNum b = CycloNum::root_of_unity(3, 2) - CycloNum::one(3);
  CHECK((a * b).lift_to_level(12) ==
        a.lift_to_level(12) * b.lift_to_level(12));
}

TEST_CASE("level reduction for display") {
  // a cube root of unity carried at level 12 reduces to level 3
  CycloNum xi12 = CycloNum::root_of_unity(12, 4);
  CycloNum r = xi12.reduced();
  CHECK(r.level() == 3);
  CHECK(r == CycloNum::root_of_unity(3, 1));
  CHECK(r.str() == "z3");
  CHECK(CycloNum::root_of_unity(12, 8).reduced().str() == "-1 - z3");

  // rationals land at level 1; genuine level-12 values stay put
  CHECK(CycloNum(12, Rat(7)).reduced().level() == 1);
  CHECK(CycloNum::zero(12).reduced().level() == 1);
  CHECK(CycloNum::root_of_unity(12, 1).reduced().level() == 12);
  CHECK(CycloNum::root_of_unity(12, 3).reduced().level() == 4);  // i

  // reduction preserves the value
  Lcg rng;
  for (int trial = 0; trial < 10; ++trial) {
    CycloNum v = rng.value(12);
    CycloNum red = v.reduced();
    CHECK(red.lift_to_level(12) == v);
  }
}

TEST_CASE("rendering") {
  CHECK(CycloNum::zero(12).str() == "0");
  CHECK(CycloNum(12, Rat(-3, 2)).str() == "-3/2");
  CHECK(CycloNum::root_of_unity(12, 1).str() == "z12");
  CHECK(CycloNum::root_of_unity(12, 3).str() == "z12^3");
  CycloNum v = CycloNum(12, Rat(-1)) +
               CycloNum(12, Rat(2)) * CycloNum::root_of_unity(12, 3);
  CHECK(v.str() == "-1 + 2*z12^3");
  CHECK((-v).str() == "1 - 2*z12^3");
  // zeta_3 + zeta_3^2 renders through as_rational
  CHECK((CycloNum::root_of_unity(3, 1) + CycloNum::root_of_unity(3, 2)).str()
        == "-1");
}
