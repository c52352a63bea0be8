#include "g1rank/ratrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "g1rank/errors.hpp"
#include "g1rank/numeric.hpp"

namespace g1rank {

namespace {

std::vector<int64_t> units_mod(int64_t n) {
  std::vector<int64_t> units;
  for (int64_t t = 0; t < n; ++t)
    if (std::gcd(t, n) == 1) units.push_back(t);
  if (units.empty()) units.push_back(0);  // n = 1: the trivial group {0}
  return units;
}

std::string row_key(const std::vector<CycloNum>& values) {
  std::ostringstream out;
  for (const auto& v : values) out << v.str() << '|';
  return out.str();
}

}  // namespace

std::vector<int64_t> galois_stabilizer(const Character& chi, int64_t n) {
  std::vector<int64_t> fixed;
  for (int64_t t : units_mod(n)) {
    bool fixes = true;
    for (const auto& v : chi.values) {
      if (!(v.galois_apply(t) == v)) {
        fixes = false;
        break;
      }
    }
    if (fixes) fixed.push_back(t);
  }
  return fixed;
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& tab) {
  int64_t n = tab.group_exponent;
  std::map<std::string, int> index_of_row;
  for (size_t i = 0; i < tab.characters.size(); ++i)
    index_of_row[row_key(tab.characters[i].values)] = static_cast<int>(i);

  std::vector<int> orbit_of(tab.characters.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t i = 0; i < tab.characters.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit;
    for (int64_t t : units_mod(n)) {
      std::vector<CycloNum> image;
      image.reserve(tab.characters[i].values.size());
      for (const auto& v : tab.characters[i].values)
        image.push_back(v.galois_apply(t));
      auto it = index_of_row.find(row_key(image));
      if (it == index_of_row.end())
        throw InternalError("Galois image of a character is not a row");
      if (orbit_of[it->second] < 0) {
        orbit_of[it->second] = static_cast<int>(orbits.size());
        orbit.push_back(it->second);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  // the table is canonically sorted, so ordering orbits by their minimal
  // member realizes (degree of representative, rendering) order
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

int64_t kernel_order(const Character& chi, const ClassData& cd) {
  int64_t total = 0;
  const CycloNum& at_identity = chi.values[0];
  for (int c = 0; c < cd.count(); ++c)
    if (chi.values[c] == at_identity) total += cd.classes[c].size;
  return total;
}

int64_t omega(int64_t group_order, int64_t kernel, int64_t complex_degree) {
  int64_t kd = kernel * complex_degree;
  if (kd <= 0 || group_order % kd != 0)
    throw NonIntegerOmega("omega = " + std::to_string(group_order) + "/(" +
                          std::to_string(kernel) + "*" +
                          std::to_string(complex_degree) +
                          ") is not an integer");
  return group_order / kd;
}

AbelianFieldDescriptor field_descriptor(const Character& chi, int64_t n) {
  AbelianFieldDescriptor f;
  f.level = n;
  f.stabilizer = galois_stabilizer(chi, n);
  int64_t phi = euler_phi(n);
  if (phi % static_cast<int64_t>(f.stabilizer.size()) != 0)
    throw InternalError("stabilizer size does not divide phi(n)");
  f.degree = phi / static_cast<int64_t>(f.stabilizer.size());
  int64_t minus_one = (n - 1) % n;
  f.totally_real =
      n <= 2 || std::binary_search(f.stabilizer.begin(), f.stabilizer.end(),
                                   minus_one);
  return f;
}

AbelianFieldDescriptor field_from_stabilizer(int64_t level,
                                             std::vector<int64_t> subgroup) {
  if (level < 1) throw BadSpec("level must be >= 1");
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()),
                 subgroup.end());
  int64_t identity = 1 % level;
  if (!std::binary_search(subgroup.begin(), subgroup.end(), identity))
    throw BadSpec("stabilizer must contain 1");
  for (int64_t a : subgroup) {
    if (a < 0 || a >= level || std::gcd(a, level) != 1)
      throw NotAUnit(std::to_string(a) + " is not a unit mod " +
                     std::to_string(level));
    for (int64_t b : subgroup) {
      int64_t ab = level == 1 ? 0 : mulmod(a, b, level);
      if (!std::binary_search(subgroup.begin(), subgroup.end(), ab))
        throw BadSpec("stabilizer is not closed under multiplication");
    }
  }
  AbelianFieldDescriptor f;
  f.level = level;
  f.stabilizer = std::move(subgroup);
  int64_t phi = euler_phi(level);
  if (phi % static_cast<int64_t>(f.stabilizer.size()) != 0)
    throw InternalError("stabilizer size does not divide phi(n)");
  f.degree = phi / static_cast<int64_t>(f.stabilizer.size());
  int64_t minus_one = (level - 1) % level;
  f.totally_real =
      level <= 2 || std::binary_search(f.stabilizer.begin(),
                                       f.stabilizer.end(), minus_one);
  return f;
}

int64_t unit_rank(const AbelianFieldDescriptor& field) {
  if (field.totally_real) return field.degree - 1;
  if (field.degree % 2 != 0)
    throw OddComplexDegree("totally complex field of odd degree " +
                           std::to_string(field.degree));
  return field.degree / 2 - 1;
}

std::string AbelianFieldDescriptor::str() const {
  if (degree == 1) return "Q";
  // conductor: smallest n' | n whose reduction kernel lies in H
  int64_t conductor = level;
  for (int64_t d = 1; d <= level; ++d) {
    if (level % d != 0) continue;
    bool kernel_inside = true;
    for (int64_t t : units_mod(level)) {
      if (t % d == 1 % d &&
          !std::binary_search(stabilizer.begin(), stabilizer.end(), t)) {
        kernel_inside = false;
        break;
      }
    }
    if (kernel_inside) {
      conductor = d;
      break;
    }
  }
  std::vector<int64_t> image;
  for (int64_t t : stabilizer) image.push_back(t % conductor);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::ostringstream out;
  if (image.size() == 1) {
    out << "Q(z" << conductor << ")";
  } else if (image.size() == 2 && image[1] == conductor - 1) {
    out << "Q(z" << conductor << ")+";  // maximal real subfield
  } else {
    out << "Q(z" << conductor << ")^{";
    bool first = true;
    for (int64_t t : image) {
      if (t == 1) continue;
      if (!first) out << ',';
      out << t;
      first = false;
    }
    out << '}';
  }
  return out.str();
}

std::vector<RationalIrrep> rational_irreps(const CharacterTable& tab) {
  int64_t n = tab.group_exponent;
  std::vector<RationalIrrep> irreps;
  for (const auto& orbit : galois_orbits(tab)) {
    RationalIrrep rho;
    rho.orbit = orbit;
    rho.representative = orbit.front();
    const Character& chi = tab.characters[rho.representative];
    rho.kernel_order = kernel_order(chi, tab.classes);
    rho.complex_degree = chi.degree;
    rho.omega = omega(tab.group_order, rho.kernel_order, rho.complex_degree);
    rho.field = field_descriptor(chi, n);
    rho.unit_rank = unit_rank(rho.field);
    // kernel, degree and omega are orbit invariants; verify
    for (int idx : orbit) {
      const Character& other = tab.characters[idx];
      if (other.degree != rho.complex_degree ||
          kernel_order(other, tab.classes) != rho.kernel_order)
        throw InternalError("Galois-conjugate characters disagree on "
                            "kernel or degree");
    }
    if (static_cast<int64_t>(orbit.size()) != rho.field.degree)
      throw InternalError("orbit size differs from the field degree");
    irreps.push_back(std::move(rho));
  }
  return irreps;
}

}  // namespace g1rank
