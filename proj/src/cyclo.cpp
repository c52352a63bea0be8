#include "g1rank/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "g1rank/errors.hpp"

namespace g1rank {

int poly_degree(const IntPolynomial& p) {
  return static_cast<int>(p.size()) - 1;
}

namespace {

void poly_trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, quotient only; remainder must be zero.
IntPolynomial poly_divexact(const IntPolynomial& num,
                            const IntPolynomial& den) {
  IntPolynomial rem = num;
  IntPolynomial quot(num.size() - den.size() + 1, Int(0));
  Int lead = den.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    Int c = rem[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw InternalError("poly_divexact: nonzero remainder");
  poly_trim(quot);
  return quot;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int64_t n) {
  if (n < 1) throw BadSpec("cyclotomic_polynomial: n must be >= 1");
  // x^n - 1
  IntPolynomial p(n + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_divexact(p, cyclotomic_polynomial(d));
  }
  return p;
}

namespace {

// Per-level context: Phi_n and the reduction table x^e mod Phi_n for all
// e in [0, n). Computed once per level, shared behind a mutex.
struct LevelData {
  int64_t n = 1;
  int64_t phi = 1;
  IntPolynomial cyclotomic;
  // pow[e][i]: coefficient of z^i in the reduction of z^e, e in [0, n)
  std::vector<std::vector<Int>> pow;
};

const LevelData& level_data(int64_t n) {
  static std::mutex mu;
  static std::map<int64_t, std::unique_ptr<LevelData>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto data = std::make_unique<LevelData>();
  data->n = n;
  data->cyclotomic = cyclotomic_polynomial(n);
  data->phi = poly_degree(data->cyclotomic);
  int64_t phi = data->phi;
  data->pow.resize(n);
  for (int64_t e = 0; e < n; ++e) {
    auto& row = data->pow[e];
    if (e < phi) {
      row.assign(phi, Int(0));
      row[e] = 1;
      continue;
    }
    // z^e = z * z^{e-1}, reduced by the monic Phi_n
    row = data->pow[e - 1];
    Int top = row.back();
    for (int64_t i = phi - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (top != 0)
      for (int64_t i = 0; i < phi; ++i) row[i] -= top * data->cyclotomic[i];
  }
  const LevelData& ref = *data;
  cache.emplace(n, std::move(data));
  return ref;
}

}  // namespace

CycloNum::CycloNum(int64_t level, const Rat& r) : level_(level) {
  const LevelData& ld = level_data(level);
  coeffs_.assign(ld.phi, Rat(0));
  coeffs_[0] = r;
}

CycloNum CycloNum::zero(int64_t level) { return CycloNum(level, Rat(0)); }

CycloNum CycloNum::one(int64_t level) { return CycloNum(level, Rat(1)); }

CycloNum CycloNum::root_of_unity(int64_t n, int64_t k) {
  const LevelData& ld = level_data(n);
  k %= n;
  if (k < 0) k += n;
  CycloNum v = zero(n);
  const auto& row = ld.pow[k];
  for (int64_t i = 0; i < ld.phi; ++i) v.coeffs_[i] = Rat(row[i]);
  return v;
}

bool CycloNum::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rat> CycloNum::as_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

CycloNum CycloNum::operator+(const CycloNum& rhs) const {
  if (level_ != rhs.level_)
    throw LevelMismatch("cyclotomic addition across levels");
  CycloNum r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += rhs.coeffs_[i];
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (level_ != rhs.level_)
    throw LevelMismatch("cyclotomic addition across levels");
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (rhs.coeffs_[i] != 0) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloNum CycloNum::operator-(const CycloNum& rhs) const {
  if (level_ != rhs.level_)
    throw LevelMismatch("cyclotomic subtraction across levels");
  CycloNum r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= rhs.coeffs_[i];
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& rhs) const {
  if (level_ != rhs.level_)
    throw LevelMismatch("cyclotomic multiplication across levels");
  const LevelData& ld = level_data(level_);
  int64_t phi = ld.phi;

  // scalar fast path: a rational factor just scales the other operand
  auto scale_by = [phi](const CycloNum& value, const Rat& c) {
    CycloNum r = value;
    if (c == 1) return r;
    for (int64_t i = 0; i < phi; ++i)
      if (r.coeffs_[i] != 0) r.coeffs_[i] *= c;
    if (c == 0) r = zero(value.level_);
    return r;
  };
  if (as_rational()) return scale_by(rhs, coeffs_[0]);
  if (rhs.as_rational()) return scale_by(*this, rhs.coeffs_[0]);

  // convolution, skipping zero rows
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (int64_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int64_t j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  CycloNum r = zero(level_);
  for (int64_t e = 0; e < phi; ++e) r.coeffs_[e] = std::move(conv[e]);
  for (int64_t e = phi; e < 2 * phi - 1; ++e) {
    if (conv[e] == 0) continue;
    const auto& row = ld.pow[e % ld.n];
    for (int64_t i = 0; i < phi; ++i)
      if (row[i] != 0) r.coeffs_[i] += conv[e] * Rat(row[i]);
  }
  return r;
}

bool CycloNum::operator==(const CycloNum& rhs) const {
  if (level_ != rhs.level_)
    throw LevelMismatch("cyclotomic comparison across levels");
  return coeffs_ == rhs.coeffs_;
}

CycloNum CycloNum::galois_apply(int64_t t) const {
  int64_t n = level_;
  t %= n;
  if (t < 0) t += n;
  if (std::gcd(t, n) != 1)
    throw NotAUnit("galois_apply: exponent not a unit mod the level");
  const LevelData& ld = level_data(n);
  CycloNum r = zero(n);
  for (int64_t i = 0; i < ld.phi; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = ld.pow[(i * t) % n];
    for (int64_t j = 0; j < ld.phi; ++j)
      if (row[j] != 0) r.coeffs_[j] += coeffs_[i] * Rat(row[j]);
  }
  return r;
}

CycloNum CycloNum::lift_to_level(int64_t m) const {
  if (m == level_) return *this;
  if (m % level_ != 0)
    throw LevelMismatch("lift_to_level: target is not a multiple");
  const LevelData& ld = level_data(m);
  int64_t step = m / level_;
  CycloNum r = zero(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = ld.pow[(static_cast<int64_t>(i) * step) % m];
    for (int64_t j = 0; j < ld.phi; ++j)
      if (row[j] != 0) r.coeffs_[j] += coeffs_[i] * Rat(row[j]);
  }
  return r;
}

CycloNum CycloNum::reduced() const {
  int64_t n = level_;
  if (n == 1) return *this;
  for (int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // value lies in Q(zeta_d) iff every automorphism fixing zeta_d
    // fixes it
    bool fixed = true;
    for (int64_t t = 1; t < n && fixed; ++t) {
      if (std::gcd(t, n) != 1 || t % d != 1 % d) continue;
      if (!(galois_apply(t) == *this)) fixed = false;
    }
    if (!fixed) continue;
    // solve for coordinates in the level-d power basis: the lift of
    // zeta_d^j gives column j
    const LevelData& ld = level_data(n);
    int64_t phi_d = euler_phi(d);
    std::vector<std::vector<Rat>> aug(
        ld.phi, std::vector<Rat>(phi_d + 1, Rat(0)));
    for (int64_t j = 0; j < phi_d; ++j) {
      const auto& row = ld.pow[(j * (n / d)) % n];
      for (int64_t i = 0; i < ld.phi; ++i) aug[i][j] = Rat(row[i]);
    }
    for (int64_t i = 0; i < ld.phi; ++i) aug[i][phi_d] = coeffs_[i];
    // exact Gaussian elimination
    int64_t rank = 0;
    for (int64_t col = 0; col < phi_d && rank < ld.phi; ++col) {
      int64_t sel = rank;
      while (sel < ld.phi && aug[sel][col] == 0) ++sel;
      if (sel == ld.phi) continue;
      std::swap(aug[rank], aug[sel]);
      Rat inv = aug[rank][col];
      for (int64_t j = col; j <= phi_d; ++j) aug[rank][j] /= inv;
      for (int64_t i = 0; i < ld.phi; ++i) {
        if (i == rank || aug[i][col] == 0) continue;
        Rat f = aug[i][col];
        for (int64_t j = col; j <= phi_d; ++j)
          aug[i][j] -= f * aug[rank][j];
      }
      ++rank;
    }
    for (int64_t i = rank; i < ld.phi; ++i)
      if (aug[i][phi_d] != 0)
        throw InternalError("level reduction: inconsistent system");
    CycloNum r = zero(d);
    for (int64_t i = 0; i < rank; ++i) {
      // pivot column of row i
      int64_t col = 0;
      while (col < phi_d && aug[i][col] == 0) ++col;
      if (col < phi_d) r.coeffs_[col] = aug[i][phi_d];
    }
    return r;
  }
  return *this;
}

std::string CycloNum::str() const {
  if (auto r = as_rational()) return r->get_str();
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << abs_c.get_str();
      continue;
    }
    if (abs_c != 1) out << abs_c.get_str() << '*';
    out << 'z' << level_;
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace g1rank
