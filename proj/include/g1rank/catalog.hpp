#ifndef G1RANK_CATALOG_HPP
#define G1RANK_CATALOG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "g1rank/perm.hpp"

namespace g1rank {

/// A named group constructor. dihedral and generalized_quaternion take
/// the group ORDER (not the index); symmetric/alternating take n.
struct GroupSpec {
  enum class Kind {
    trivial,
    cyclic,
    dihedral,
    generalized_quaternion,
    symmetric,
    alternating,
    sl2_3,
    product,
    file_entry,
  };

  Kind kind = Kind::trivial;
  int64_t parameter = 0;
  std::vector<GroupSpec> factors;          // product only
  std::vector<Permutation> generators;     // file_entry only
  std::string name;

  static GroupSpec cyclic(int64_t n);
  static GroupSpec dihedral(int64_t order);
  static GroupSpec generalized_quaternion(int64_t order);
  static GroupSpec symmetric(int64_t n);
  static GroupSpec alternating(int64_t n);
  static GroupSpec sl2_3();
  static GroupSpec product(std::vector<GroupSpec> factors);
};

/// Generators of a permutation group isomorphic to the spec'd group.
/// Throws BadSpec naming the violated constraint.
std::vector<Permutation> construct(const GroupSpec& spec);

/// Generators acting on the disjoint union of the two point sets.
std::vector<Permutation> direct_product(const std::vector<Permutation>& a,
                                        const std::vector<Permutation>& b);

struct CatalogEntry {
  std::string name;
  std::vector<Permutation> generators;
};

/// Catalog grammar (UTF-8, line oriented):
///   name := cycles[, cycles]*
/// where cycles is a product of disjoint cycles like (1,2,3)(4,5) and
/// "()" is the identity; '#' starts a comment; blank lines are ignored;
/// degree = max point mentioned in the entry.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> parse_catalog_text(const std::string& text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

/// Command-line group grammar: "cyclic:6", "dihedral:8", "sl2_3",
/// "symmetric:5", products like "cyclic:2 x cyclic:4".
GroupSpec parse_group_spec(const std::string& text);

}  // namespace g1rank

#endif
