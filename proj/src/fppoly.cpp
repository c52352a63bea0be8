#include "g1rank/fppoly.hpp"

#include <algorithm>

#include "g1rank/errors.hpp"

namespace g1rank {

namespace {

void trim(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

int64_t norm(int64_t v, int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

FpPoly fp_x(int64_t p) { return FpPoly{p, {0, 1}}; }

}  // namespace

FpPoly fp_poly(int64_t p, std::vector<int64_t> coeffs) {
  FpPoly a{p, std::move(coeffs)};
  for (auto& v : a.c) v = norm(v, p);
  trim(a);
  return a;
}

FpPoly fp_from_int_poly(const IntPolynomial& f, int64_t p) {
  FpPoly a{p, {}};
  a.c.reserve(f.size());
  for (const Int& v : f) {
    Int r = v % p;
    if (r < 0) r += p;
    a.c.push_back(r.get_si());
  }
  trim(a);
  return a;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, a.c};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = norm(r.c[i] + b.c[i], a.p);
  trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r{a.p, a.c};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = norm(r.c[i] - b.c[i], a.p);
  trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
  FpPoly r{a.p, std::vector<int64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
  }
  trim(r);
  return r;
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m) {
  if (m.is_zero()) throw InternalError("fp_mod: zero modulus");
  FpPoly r = a;
  int64_t inv_lead = invmod(m.c.back(), m.p);
  while (!r.is_zero() && r.c.size() >= m.c.size()) {
    int64_t coef = mulmod(r.c.back(), inv_lead, m.p);
    size_t shift = r.c.size() - m.c.size();
    for (size_t i = 0; i < m.c.size(); ++i)
      r.c[shift + i] = norm(r.c[shift + i] - mulmod(coef, m.c[i], m.p), m.p);
    trim(r);
  }
  return r;
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw InternalError("fp_divexact: zero divisor");
  FpPoly rem = a;
  FpPoly quot{a.p, std::vector<int64_t>(
                       a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1
                                                : 0,
                       0)};
  int64_t inv_lead = invmod(b.c.back(), b.p);
  while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
    int64_t coef = mulmod(rem.c.back(), inv_lead, b.p);
    size_t shift = rem.c.size() - b.c.size();
    quot.c[shift] = coef;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[shift + i] = norm(rem.c[shift + i] - mulmod(coef, b.c[i], b.p),
                              b.p);
    trim(rem);
  }
  if (!rem.is_zero()) throw InternalError("fp_divexact: nonzero remainder");
  trim(quot);
  return quot;
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  FpPoly r = a;
  int64_t inv = invmod(r.c.back(), r.p);
  for (auto& v : r.c) v = mulmod(v, inv, r.p);
  return r;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly t = fp_mod(x, y);
    x = std::move(y);
    y = std::move(t);
  }
  return fp_monic(x);
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly r{a.p, {}};
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(mulmod(a.c[i], static_cast<int64_t>(i % a.p), a.p));
  trim(r);
  return r;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  FpPoly result = fp_mod(fp_poly(m.p, {1}), m);
  FpPoly b = fp_mod(base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (size_t i = bits; i-- > 0;) {
    result = fp_mod(fp_mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = fp_mod(fp_mul(result, b), m);
  }
  return result;
}

namespace {

Int int_pow(int64_t base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Next candidate polynomial in the deterministic sweep: nonconstant
// polynomials enumerated by interpreting a counter in base p.
FpPoly nth_candidate(int64_t p, Int counter) {
  std::vector<int64_t> coeffs;
  Int idx = counter + p;  // skip the p constants
  while (idx > 0) {
    Int digit = idx % p;
    coeffs.push_back(digit.get_si());
    idx /= p;
  }
  return fp_poly(p, std::move(coeffs));
}

// Split a product of distinct monic irreducibles, all of degree d.
void equal_degree_split(const FpPoly& h, int d, std::vector<FpPoly>& out) {
  if (h.degree() == 0) return;
  if (h.degree() == d) {
    out.push_back(fp_monic(h));
    return;
  }
  int64_t p = h.p;
  for (Int counter = 0;; ++counter) {
    if (counter > 4 * int_pow(p, 2 * d) + 1024)
      throw InternalError("equal_degree_split: no separating candidate");
    FpPoly u = nth_candidate(p, counter);
    FpPoly g;
    if (p == 2) {
      // trace map u + u^2 + ... + u^{2^{d-1}} mod h
      FpPoly t = fp_mod(u, h);
      FpPoly acc = t;
      for (int i = 1; i < d; ++i) {
        t = fp_mod(fp_mul(t, t), h);
        acc = fp_add(acc, t);
      }
      g = fp_gcd(h, acc);
    } else {
      Int e = (int_pow(p, d) - 1) / 2;
      FpPoly w = fp_powmod(u, e, h);
      g = fp_gcd(h, fp_sub(w, fp_poly(p, {1})));
    }
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree_split(g, d, out);
      equal_degree_split(fp_divexact(h, g), d, out);
      return;
    }
  }
}

// Factor a squarefree monic polynomial: distinct-degree first, then
// equal-degree splitting.
void factor_squarefree(FpPoly f, std::vector<FpPoly>& out) {
  int64_t p = f.p;
  FpPoly x = fp_x(p);
  FpPoly w = fp_mod(x, f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    w = fp_powmod(w, Int(p), f);  // now x^(p^d) mod f
    FpPoly h = fp_gcd(f, fp_sub(w, x));
    if (h.degree() > 0) {
      equal_degree_split(h, d, out);
      f = fp_divexact(f, h);
      w = fp_mod(w, f);
    }
  }
  if (f.degree() > 0) out.push_back(fp_monic(f));
}

// p-th root of a polynomial of the form u(x)^p = u(x^p) over F_p.
FpPoly fp_pth_root(const FpPoly& f) {
  FpPoly r{f.p, {}};
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i % f.p == 0) {
      r.c.push_back(f.c[i]);
    } else if (f.c[i] != 0) {
      throw InternalError("fp_pth_root: input is not a p-th power");
    }
  }
  trim(r);
  return r;
}

void distinct_factors(const FpPoly& f_in, std::vector<FpPoly>& out) {
  FpPoly f = fp_monic(f_in);
  if (f.degree() <= 0) return;
  FpPoly d = fp_derivative(f);
  if (d.is_zero()) {
    distinct_factors(fp_pth_root(f), out);
    return;
  }
  FpPoly g = fp_gcd(f, d);
  FpPoly tame = fp_divexact(f, g);  // product of factors with p-coprime
                                    // multiplicity, squarefree
  factor_squarefree(fp_monic(tame), out);
  // strip tame factors from g entirely; what remains has only factors
  // of multiplicity divisible by p
  FpPoly wild = g;
  while (true) {
    FpPoly h = fp_gcd(wild, tame);
    if (h.degree() <= 0) break;
    wild = fp_divexact(wild, h);
  }
  if (wild.degree() > 0) distinct_factors(wild, out);
}

}  // namespace

std::vector<FpPoly> fp_distinct_irreducible_factors(const FpPoly& f) {
  if (f.is_zero()) throw InternalError("cannot factor the zero polynomial");
  std::vector<FpPoly> out;
  distinct_factors(f, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(),
                                        b.c.rbegin(), b.c.rend());
  });
  return out;
}

std::vector<int64_t> fp_roots_of_split_squarefree(const FpPoly& f) {
  std::vector<FpPoly> factors;
  factor_squarefree(fp_monic(f), factors);
  std::vector<int64_t> roots;
  for (const auto& g : factors) {
    if (g.degree() != 1)
      throw InternalError("polynomial does not split into linear factors");
    roots.push_back(norm(-g.c[0], f.p));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace g1rank
