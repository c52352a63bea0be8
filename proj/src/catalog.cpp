#include "g1rank/catalog.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "g1rank/errors.hpp"

namespace g1rank {

GroupSpec GroupSpec::cyclic(int64_t n) {
  GroupSpec s;
  s.kind = Kind::cyclic;
  s.parameter = n;
  s.name = "cyclic:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::dihedral(int64_t order) {
  GroupSpec s;
  s.kind = Kind::dihedral;
  s.parameter = order;
  s.name = "dihedral:" + std::to_string(order);
  return s;
}

GroupSpec GroupSpec::generalized_quaternion(int64_t order) {
  GroupSpec s;
  s.kind = Kind::generalized_quaternion;
  s.parameter = order;
  s.name = "generalized_quaternion:" + std::to_string(order);
  return s;
}

GroupSpec GroupSpec::symmetric(int64_t n) {
  GroupSpec s;
  s.kind = Kind::symmetric;
  s.parameter = n;
  s.name = "symmetric:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::alternating(int64_t n) {
  GroupSpec s;
  s.kind = Kind::alternating;
  s.parameter = n;
  s.name = "alternating:" + std::to_string(n);
  return s;
}

GroupSpec GroupSpec::sl2_3() {
  GroupSpec s;
  s.kind = Kind::sl2_3;
  s.name = "sl2_3";
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::product;
  s.factors = std::move(factors);
  std::string name;
  for (const auto& f : s.factors) {
    if (!name.empty()) name += " x ";
    name += f.name;
  }
  s.name = name;
  return s;
}

namespace {

std::vector<Permutation> cyclic_generators(int64_t n) {
  if (n < 1) throw BadSpec("cyclic: parameter must be >= 1");
  std::vector<int> img(n);
  for (int64_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
  return {Permutation(std::move(img))};
}

std::vector<Permutation> dihedral_generators(int64_t order) {
  if (order < 4 || order % 2 != 0)
    throw BadSpec("dihedral: parameter is the group order, even and >= 4");
  int64_t m = order / 2;
  if (m == 2) {
    // order 4 = Klein four group; the 2-gon action is not faithful
    return {Permutation::parse_cycles("(1,2)", 4),
            Permutation::parse_cycles("(3,4)", 4)};
  }
  std::vector<int> rot(m), refl(m);
  for (int64_t i = 0; i < m; ++i) {
    rot[i] = static_cast<int>((i + 1) % m);
    refl[i] = static_cast<int>(i == 0 ? 0 : m - i);  // fixes point 1
  }
  return {Permutation(std::move(rot)), Permutation(std::move(refl))};
}

// Dicyclic group of the given order 4m: <a, b | a^{2m} = 1, b^2 = a^m,
// b a b^-1 = a^-1>, acting on its own 4m elements a^i b^j by left
// multiplication.
std::vector<Permutation> quaternion_generators(int64_t order) {
  if (order < 8 || order % 4 != 0)
    throw BadSpec(
        "generalized_quaternion: parameter is the group order, divisible by "
        "4 and >= 8");
  int64_t m = order / 4;
  int64_t two_m = 2 * m;
  auto index = [&](int64_t i, int64_t j) {
    return static_cast<int>(i + two_m * j);
  };
  std::vector<int> a(order), b(order);
  for (int64_t j = 0; j < 2; ++j) {
    for (int64_t i = 0; i < two_m; ++i) {
      // left multiply (i, j) by a = (1, 0): a * a^i b^j = a^{i+1} b^j
      a[index(i, j)] = index((i + 1) % two_m, j);
      // left multiply by b = (0, 1): b a^i = a^{-i} b, b^2 = a^m
      if (j == 0)
        b[index(i, j)] = index(((two_m - i) % two_m), 1);
      else
        b[index(i, j)] = index((two_m - i + m) % two_m, 0);
    }
  }
  return {Permutation(std::move(a)), Permutation(std::move(b))};
}

std::vector<Permutation> symmetric_generators(int64_t n) {
  if (n < 1) throw BadSpec("symmetric: parameter must be >= 1");
  if (n == 1) return {Permutation::identity(1)};
  if (n == 2) return {Permutation::parse_cycles("(1,2)")};
  std::ostringstream cycle;
  cycle << '(';
  for (int64_t i = 1; i <= n; ++i) cycle << (i > 1 ? "," : "") << i;
  cycle << ')';
  return {Permutation::parse_cycles("(1,2)", static_cast<int>(n)),
          Permutation::parse_cycles(cycle.str())};
}

std::vector<Permutation> alternating_generators(int64_t n) {
  if (n < 1) throw BadSpec("alternating: parameter must be >= 1");
  if (n <= 2) return {Permutation::identity(static_cast<int>(n))};
  if (n == 3) return {Permutation::parse_cycles("(1,2,3)")};
  // (1,2,3) plus an n- or (n-1)-cycle of even parity
  std::ostringstream cycle;
  cycle << '(';
  if (n % 2 == 1) {
    for (int64_t i = 1; i <= n; ++i) cycle << (i > 1 ? "," : "") << i;
  } else {
    for (int64_t i = 2; i <= n; ++i) cycle << (i > 2 ? "," : "") << i;
  }
  cycle << ')';
  return {Permutation::parse_cycles("(1,2,3)", static_cast<int>(n)),
          Permutation::parse_cycles(cycle.str(), static_cast<int>(n))};
}

// SL(2,F3) acting on the 8 nonzero vectors of F3^2 (listed in
// lexicographic order) by left matrix multiplication; generators are
// S = (0 -1 / 1 0) and T = (1 1 / 0 1).
std::vector<Permutation> sl2_3_generators() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto find = [&](int a, int b) {
    for (size_t k = 0; k < vecs.size(); ++k)
      if (vecs[k] == std::make_pair(a, b)) return static_cast<int>(k);
    throw InternalError("sl2_3: vector lookup failed");
  };
  auto matrix_perm = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(8);
    for (size_t k = 0; k < vecs.size(); ++k) {
      auto [a, b] = vecs[k];
      img[k] = find(((m00 * a + m01 * b) % 3 + 3) % 3,
                    ((m10 * a + m11 * b) % 3 + 3) % 3);
    }
    return Permutation(std::move(img));
  };
  return {matrix_perm(0, -1, 1, 0), matrix_perm(1, 1, 0, 1)};
}

}  // namespace

std::vector<Permutation> direct_product(const std::vector<Permutation>& a,
                                        const std::vector<Permutation>& b) {
  if (a.empty() || b.empty())
    throw BadSpec("direct_product: both factors need generators");
  int da = a.front().degree();
  int db = b.front().degree();
  std::vector<Permutation> gens;
  for (const auto& p : a) gens.push_back(p.extended(da + db));
  for (const auto& p : b) {
    std::vector<int> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = i;
    for (int i = 0; i < db; ++i) img[da + i] = da + p.apply(i);
    gens.push_back(Permutation(std::move(img)));
  }
  return gens;
}

std::vector<Permutation> construct(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::trivial:
      return {Permutation::identity(1)};
    case GroupSpec::Kind::cyclic:
      return cyclic_generators(spec.parameter);
    case GroupSpec::Kind::dihedral:
      return dihedral_generators(spec.parameter);
    case GroupSpec::Kind::generalized_quaternion:
      return quaternion_generators(spec.parameter);
    case GroupSpec::Kind::symmetric:
      return symmetric_generators(spec.parameter);
    case GroupSpec::Kind::alternating:
      return alternating_generators(spec.parameter);
    case GroupSpec::Kind::sl2_3:
      return sl2_3_generators();
    case GroupSpec::Kind::product: {
      if (spec.factors.empty()) throw BadSpec("product: no factors");
      std::vector<Permutation> gens = construct(spec.factors.front());
      for (size_t i = 1; i < spec.factors.size(); ++i)
        gens = direct_product(gens, construct(spec.factors[i]));
      return gens;
    }
    case GroupSpec::Kind::file_entry:
      if (spec.generators.empty()) throw BadSpec("file entry: no generators");
      return spec.generators;
  }
  throw BadSpec("unknown group spec kind");
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t sep = line.find(":=");
    if (sep == std::string::npos)
      throw ParseError(lineno, "expected 'name := generators'");
    std::string name = trim(line.substr(0, sep));
    if (name.empty()) throw ParseError(lineno, "empty name");
    if (name.find_first_of(" \t") != std::string::npos)
      throw ParseError(lineno, "name must not contain whitespace");
    if (!names.insert(name).second)
      throw DuplicateName("duplicate catalog name: " + name);
    std::string rhs = trim(line.substr(sep + 2));
    if (rhs.empty()) throw ParseError(lineno, "no generators");
    // split on top-level commas between cycle products: a comma is a
    // generator separator exactly when it is outside parentheses
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : rhs) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth < 0) throw ParseError(lineno, "unbalanced ')'");
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (depth != 0) throw ParseError(lineno, "unbalanced '('");
    parts.push_back(cur);
    std::vector<Permutation> gens;
    int max_degree = 1;
    try {
      for (const auto& part : parts) {
        std::string t = trim(part);
        if (t.empty()) throw BadSpec("empty generator");
        gens.push_back(Permutation::parse_cycles(t));
        max_degree = std::max(max_degree, gens.back().degree());
      }
    } catch (const BadSpec& e) {
      throw ParseError(lineno, e.what());
    }
    for (auto& p : gens) p = p.extended(max_degree);
    entries.push_back({std::move(name), std::move(gens)});
  }
  return entries;
}

std::vector<CatalogEntry> parse_catalog_text(const std::string& text) {
  std::istringstream in(text);
  return parse_catalog(in);
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return parse_catalog(in);
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.name << " := ";
    for (size_t i = 0; i < e.generators.size(); ++i) {
      if (i) out << ", ";
      out << e.generators[i].cycle_string();
    }
    out << '\n';
  }
  return out.str();
}

GroupSpec parse_group_spec(const std::string& text) {
  // split on 'x' tokens separated by whitespace
  std::istringstream in(trim(text));
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw BadSpec("empty group spec");

  std::vector<GroupSpec> factors;
  bool expect_factor = true;
  for (const auto& t : tokens) {
    if (t == "x") {
      if (expect_factor) throw BadSpec("misplaced 'x' in group spec");
      expect_factor = true;
      continue;
    }
    if (!expect_factor)
      throw BadSpec("expected 'x' between factors in group spec");
    expect_factor = false;
    size_t colon = t.find(':');
    std::string kind = colon == std::string::npos ? t : t.substr(0, colon);
    GroupSpec s;
    if (kind == "trivial") {
      s.kind = GroupSpec::Kind::trivial;
      s.name = "trivial";
      if (colon != std::string::npos) throw BadSpec("trivial takes no parameter");
    } else if (kind == "sl2_3") {
      s = GroupSpec::sl2_3();
      if (colon != std::string::npos) throw BadSpec("sl2_3 takes no parameter");
    } else {
      if (colon == std::string::npos)
        throw BadSpec("expected '<family>:<n>' in group spec, got '" + t +
                      "'");
      int64_t n;
      try {
        size_t used = 0;
        n = std::stoll(t.substr(colon + 1), &used);
        if (used != t.size() - colon - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw BadSpec("bad parameter in group spec '" + t + "'");
      }
      if (kind == "cyclic")
        s = GroupSpec::cyclic(n);
      else if (kind == "dihedral")
        s = GroupSpec::dihedral(n);
      else if (kind == "generalized_quaternion")
        s = GroupSpec::generalized_quaternion(n);
      else if (kind == "symmetric")
        s = GroupSpec::symmetric(n);
      else if (kind == "alternating")
        s = GroupSpec::alternating(n);
      else
        throw BadSpec("unknown group family '" + kind + "'");
    }
    factors.push_back(std::move(s));
  }
  if (expect_factor) throw BadSpec("group spec ends with 'x'");
  if (factors.size() == 1) return factors.front();
  return GroupSpec::product(std::move(factors));
}

}  // namespace g1rank
