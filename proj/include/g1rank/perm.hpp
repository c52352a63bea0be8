#ifndef G1RANK_PERM_HPP
#define G1RANK_PERM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace g1rank {

/// A permutation of {1..degree}, stored 0-based: img[i] is the image of
/// point i. Printed and parsed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Parse disjoint-cycle notation like "(1,2,3)(4,5)"; "()" is the
  /// identity. Points are 1-based; degree = max point seen, at least
  /// min_degree.
  static Permutation parse_cycles(const std::string& text, int min_degree = 1);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  /// Multiplicative order, from the cycle type.
  int64_t order() const;
  Permutation inverse() const;
  /// (a*b)(x) = a(b(x)); b acts first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation power(int64_t k) const;
  /// Same mapping extended with fixed points up to new_degree.
  Permutation extended(int new_degree) const;

  auto operator<=>(const Permutation&) const = default;

  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

/// A fully enumerated finite permutation group. Elements are kept in
/// lexicographic order of image arrays, so elements[0] is the identity
/// and element lookups are binary searches.
struct Group {
  int degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  int64_t order() const { return static_cast<int64_t>(elements.size()); }
  /// Index into elements, or -1.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
};

struct ConjClass {
  Permutation representative;  // lexicographically minimal member
  int64_t size = 0;
  int64_t element_order = 0;
  std::vector<int> members;  // element indices
};

/// Conjugacy classes in canonical order: sorted by (element_order, size,
/// minimal member); the identity class is class 0.
struct ClassData {
  std::vector<ConjClass> classes;
  std::vector<int> class_of;  // element index -> class index

  int count() const { return static_cast<int>(classes.size()); }
};

inline constexpr int64_t kDefaultGroupCap = 20000;

/// Closure of the generators under composition. Throws CapExceeded when
/// the closure grows past cap, EmptyGenerators when generators is empty
/// and no degree is supplied (with a degree, returns the trivial group).
Group generate_group(const std::vector<Permutation>& generators,
                     int64_t cap = kDefaultGroupCap,
                     std::optional<int> degree = std::nullopt);

ClassData conjugacy_classes(const Group& g);

/// Least k >= 1 with x^k = identity. Throws NotAMember if x is not in g.
int64_t element_order(const Group& g, const Permutation& x);

/// Image of each class under C -> class of (representative^k). k may be
/// any integer (negative = inverse powers).
std::vector<int> class_power_map(const Group& g, const ClassData& cd,
                                 int64_t k);

/// lcm of element orders.
int64_t exponent(const Group& g);

bool is_abelian(const Group& g);
/// Nilpotency test: for each prime p | |G|, the p-elements must be
/// exactly a (then unique) Sylow p-subgroup.
bool is_nilpotent(const Group& g);

}  // namespace g1rank

#endif
