#include "g1rank/chartab.hpp"

#include <algorithm>
#include <string>

#include "g1rank/errors.hpp"
#include "g1rank/fppoly.hpp"
#include "g1rank/numeric.hpp"

namespace g1rank {

namespace {

using Vec = std::vector<int64_t>;
using Mat = std::vector<Vec>;

// Reduced row echelon form with first-nonzero pivoting; returns pivot
// columns. Deterministic.
std::vector<int> rref(Mat& m, int64_t q) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    int64_t inv = invmod(m[rank][col], q);
    for (size_t j = col; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv, q);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      int64_t f = m[i][col];
      for (size_t j = col; j < cols; ++j) {
        m[i][j] = (m[i][j] - mulmod(f, m[rank][j], q)) % q;
        if (m[i][j] < 0) m[i][j] += q;
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  m.resize(rank, Vec(cols, 0));
  return pivots;
}

// Kernel basis of a square matrix, rows in RREF.
Mat kernel_basis(Mat a, int64_t q) {
  size_t n = a.size();
  std::vector<int> pivots = rref(a, q);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      int64_t val = a[r][f];
      v[pivots[r]] = val == 0 ? 0 : q - val;
    }
    basis.push_back(std::move(v));
  }
  rref(basis, q);
  return basis;
}

// Coordinates of w in the span of an RREF basis; throws if w is outside.
Vec express_in_basis(const Vec& w, const Mat& basis,
                     const std::vector<int>& pivots, int64_t q) {
  Vec coord(basis.size(), 0);
  Vec residual = w;
  for (size_t i = 0; i < basis.size(); ++i) {
    int64_t c = residual[pivots[i]];
    coord[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < residual.size(); ++j) {
      residual[j] = (residual[j] - mulmod(c, basis[i][j], q)) % q;
      if (residual[j] < 0) residual[j] += q;
    }
  }
  for (int64_t v : residual)
    if (v != 0)
      throw InternalError("class matrix does not preserve a subspace");
  return coord;
}

// Characteristic polynomial over F_q via Hessenberg reduction.
FpPoly charpoly(Mat a, int64_t q) {
  size_t n = a.size();
  // similarity reduction to upper Hessenberg, first-nonzero pivoting
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t sel = col + 1;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    if (sel != col + 1) {
      std::swap(a[sel], a[col + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(a[i][sel], a[i][col + 1]);
    }
    int64_t inv = invmod(a[col + 1][col], q);
    for (size_t row = col + 2; row < n; ++row) {
      if (a[row][col] == 0) continue;
      int64_t f = mulmod(a[row][col], inv, q);
      for (size_t j = 0; j < n; ++j) {
        a[row][j] = (a[row][j] - mulmod(f, a[col + 1][j], q)) % q;
        if (a[row][j] < 0) a[row][j] += q;
      }
      for (size_t i = 0; i < n; ++i)
        a[i][col + 1] = (a[i][col + 1] + mulmod(f, a[i][row], q)) % q;
    }
  }
  // p_m = (x - a[m-1][m-1]) p_{m-1}
  //       - sum_k a[m-1-k][m-1] (prod subdiagonals) p_{m-1-k}
  std::vector<FpPoly> p(n + 1);
  p[0] = fp_poly(q, {1});
  for (size_t m = 1; m <= n; ++m) {
    FpPoly t = fp_mul(p[m - 1], fp_poly(q, {q - a[m - 1][m - 1], 1}));
    int64_t sub = 1;
    for (size_t k = 1; k < m; ++k) {
      sub = mulmod(sub, a[m - k][m - k - 1], q);
      if (sub == 0) break;
      int64_t coef = mulmod(a[m - 1 - k][m - 1], sub, q);
      if (coef == 0) continue;
      FpPoly term = p[m - 1 - k];
      for (auto& c : term.c) c = mulmod(c, coef, q);
      t = fp_sub(t, term);
    }
    p[m] = std::move(t);
  }
  return p[n];
}

int64_t primitive_root(int64_t q) {
  std::vector<int64_t> ps = prime_divisors(q - 1);
  for (int64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (int64_t p : ps) {
      if (powmod(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

int64_t isqrt_floor(int64_t n) {
  int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

int64_t dixon_prime(int64_t group_exponent, int64_t group_order) {
  int64_t bound = 2 * isqrt_floor(group_order);
  int64_t q = 1;
  for (int64_t tries = 0; tries < 1000000; ++tries) {
    q += group_exponent;
    if (q > bound && is_prime(q)) return q;
  }
  throw InternalError("no Dixon prime found within the candidate cap");
}

ClassPowerTable build_class_power_table(const Group& g, const ClassData& cd) {
  ClassPowerTable powers(cd.count());
  for (int c = 0; c < cd.count(); ++c) {
    const Permutation& rep = cd.classes[c].representative;
    int64_t o = cd.classes[c].element_order;
    powers[c].reserve(o);
    Permutation p = Permutation::identity(g.degree);
    for (int64_t r = 0; r < o; ++r) {
      powers[c].push_back(cd.class_of[g.index_of(p)]);
      p = p * rep;
    }
  }
  return powers;
}

std::vector<std::vector<int64_t>> class_matrix(const Group& g,
                                               const ClassData& cd, int i) {
  int k = cd.count();
  std::vector<std::vector<int64_t>> m(k, std::vector<int64_t>(k, 0));
  for (int x_idx : cd.classes[i].members) {
    Permutation x_inv = g.elements[x_idx].inverse();
    for (int l = 0; l < k; ++l) {
      Permutation y = x_inv * cd.classes[l].representative;
      int j = cd.class_of[g.index_of(y)];
      ++m[j][l];
    }
  }
  return m;
}

ModqTable character_table_mod_q(const Group& g, const ClassData& cd) {
  int k = cd.count();
  int64_t n = g.order();
  int64_t e = exponent(g);
  int64_t q = dixon_prime(e, n);

  // Split the common right eigenspaces of the class matrices: each
  // irreducible character gives the joint eigenvector of central
  // character values w_l = |C_l| chi(g_l) / chi(1).
  struct Subspace {
    Mat basis;               // rows, RREF
    std::vector<int> pivots;
  };
  Mat id(k, Vec(k, 0));
  for (int i = 0; i < k; ++i) id[i][i] = 1;
  std::vector<int> all_pivots(k);
  for (int i = 0; i < k; ++i) all_pivots[i] = i;
  std::vector<Subspace> spaces{{std::move(id), all_pivots}};

  for (int i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& s : spaces) all_split &= s.basis.size() == 1;
    if (all_split) break;
    Mat m = class_matrix(g, cd, i);
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      size_t dim = s.basis.size();
      if (dim == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restriction: column t of a holds the coordinates of M * basis_t
      Mat a(dim, Vec(dim, 0));
      for (size_t t = 0; t < dim; ++t) {
        Vec w(k, 0);
        for (int row = 0; row < k; ++row) {
          __int128 acc = 0;
          for (int l = 0; l < k; ++l)
            if (m[row][l] && s.basis[t][l])
              acc += static_cast<__int128>(m[row][l]) * s.basis[t][l];
          w[row] = static_cast<int64_t>(acc % q);
        }
        Vec coord = express_in_basis(w, s.basis, s.pivots, q);
        for (size_t r = 0; r < dim; ++r) a[r][t] = coord[r];
      }
      FpPoly cp = charpoly(a, q);
      FpPoly sf = fp_divexact(cp, fp_gcd(cp, fp_derivative(cp)));
      std::vector<int64_t> roots = fp_roots_of_split_squarefree(sf);
      for (int64_t lambda : roots) {
        Mat shifted = a;
        for (size_t d = 0; d < dim; ++d) {
          shifted[d][d] = (shifted[d][d] - lambda) % q;
          if (shifted[d][d] < 0) shifted[d][d] += q;
        }
        Mat ker = kernel_basis(std::move(shifted), q);
        if (ker.empty())
          throw InternalError("eigenvalue with empty eigenspace");
        // back to ambient coordinates
        Mat ambient(ker.size(), Vec(k, 0));
        for (size_t r = 0; r < ker.size(); ++r)
          for (size_t t = 0; t < dim; ++t)
            if (ker[r][t])
              for (int l = 0; l < k; ++l)
                ambient[r][l] = (ambient[r][l] +
                                 mulmod(ker[r][t], s.basis[t][l], q)) %
                                q;
        Subspace child;
        child.pivots = rref(ambient, q);
        child.basis = std::move(ambient);
        next.push_back(std::move(child));
      }
    }
    spaces = std::move(next);
  }

  if (static_cast<int>(spaces.size()) != k)
    throw InternalError("eigenspace splitting did not reach " +
                        std::to_string(k) + " one-dimensional spaces");

  // inverse-class map for the degree computation
  std::vector<int> inv_class = class_power_map(g, cd, -1);
  int64_t sqrt_n = isqrt_floor(n);

  ModqTable out;
  out.q = q;
  out.e = e;
  out.zeta_residue = powmod(primitive_root(q), (q - 1) / e, q);
  for (const auto& s : spaces) {
    if (s.basis.size() != 1)
      throw InternalError("unsplit subspace after all class matrices");
    Vec w = s.basis[0];
    if (w[0] == 0)
      throw InternalError("central character vanishes on the identity");
    int64_t scale = invmod(w[0], q);
    for (auto& v : w) v = mulmod(v, scale, q);
    // second orthogonality: sum_l w_l w_{l^-1} / |C_l| = |G| / d^2
    int64_t sum = 0;
    for (int l = 0; l < k; ++l) {
      int64_t term = mulmod(w[l], w[inv_class[l]], q);
      term = mulmod(term, invmod(cd.classes[l].size % q, q), q);
      sum = (sum + term) % q;
    }
    int64_t d2 = mulmod(n % q, invmod(sum, q), q);
    int64_t degree = 0;
    for (int64_t d = 1; d <= sqrt_n; ++d) {
      if (n % d != 0) continue;
      if (mulmod(d, d, q) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw InternalError("could not identify a true character degree");
    std::vector<int64_t> row(k);
    for (int l = 0; l < k; ++l)
      row[l] = mulmod(mulmod(degree % q, w[l], q),
                      invmod(cd.classes[l].size % q, q), q);
    out.degrees.push_back(degree);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Character> lift_character_values(const ModqTable& modq,
                                             const ClassData& cd,
                                             const ClassPowerTable& powers) {
  int k = cd.count();
  int64_t q = modq.q;
  int64_t e = modq.e;
  std::vector<Character> out;
  out.reserve(modq.rows.size());
  for (size_t s = 0; s < modq.rows.size(); ++s) {
    const auto& row = modq.rows[s];
    int64_t degree = modq.degrees[s];
    Character chi;
    chi.degree = degree;
    chi.values.reserve(k);
    for (int c = 0; c < k; ++c) {
      int64_t o = cd.classes[c].element_order;
      int64_t eta = powmod(modq.zeta_residue, e / o, q);
      int64_t eta_inv = invmod(eta, q);
      int64_t o_inv = invmod(o % q, q);
      std::vector<int64_t> vals(o);
      for (int64_t r = 0; r < o; ++r) vals[r] = row[powers[c][r]];
      // chi(g) = sum_j m_j zeta_o^j with m_j = multiplicity of the
      // eigenvalue zeta_o^j; recover m_j by Fourier inversion and stop
      // once the multiplicities account for the full degree.
      CycloNum value = CycloNum::zero(e);
      int64_t recovered = 0;
      for (int64_t j = 0; j < o && recovered < degree; ++j) {
        int64_t acc = 0;
        int64_t w = 1;  // eta^{-jr}
        int64_t step = powmod(eta_inv, j, q);
        for (int64_t r = 0; r < o; ++r) {
          acc = (acc + mulmod(vals[r], w, q)) % q;
          w = mulmod(w, step, q);
        }
        int64_t m = mulmod(acc, o_inv, q);
        if (m > degree)
          throw LiftOutOfRange("multiplicity " + std::to_string(m) +
                               " exceeds the character degree " +
                               std::to_string(degree));
        if (m == 0) continue;
        recovered += m;
        value = value + CycloNum(e, Rat(m)) *
                            CycloNum::root_of_unity(e, (e / o) * j);
      }
      if (recovered != degree)
        throw LiftOutOfRange("eigenvalue multiplicities sum to " +
                             std::to_string(recovered) + ", expected " +
                             std::to_string(degree));
      chi.values.push_back(std::move(value));
    }
    out.push_back(std::move(chi));
  }
  return out;
}

CharacterTable character_table(const Group& g) {
  ClassData cd = conjugacy_classes(g);
  ModqTable modq = character_table_mod_q(g, cd);
  ClassPowerTable powers = build_class_power_table(g, cd);
  std::vector<Character> chars = lift_character_values(modq, cd, powers);

  if (static_cast<int>(chars.size()) != cd.count())
    throw InternalError("character count differs from class count");
  Int degree_sum = 0;
  for (const auto& chi : chars) degree_sum += Int(chi.degree) * chi.degree;
  if (degree_sum != g.order())
    throw InternalError("degrees squared do not sum to the group order");

  // canonical row order: degree, then rendered values
  std::vector<std::vector<std::string>> rendered(chars.size());
  for (size_t i = 0; i < chars.size(); ++i) {
    rendered[i].reserve(chars[i].values.size());
    for (const auto& v : chars[i].values) rendered[i].push_back(v.str());
  }
  std::vector<int> order(chars.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (chars[a].degree != chars[b].degree)
      return chars[a].degree < chars[b].degree;
    return rendered[a] < rendered[b];
  });

  CharacterTable tab;
  tab.group_order = g.order();
  tab.group_exponent = modq.e;
  tab.dixon_prime = modq.q;
  tab.zeta_residue = modq.zeta_residue;
  tab.classes = std::move(cd);
  tab.characters.reserve(chars.size());
  for (int idx : order) tab.characters.push_back(std::move(chars[idx]));
  return tab;
}

}  // namespace g1rank
