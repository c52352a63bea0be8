#include "g1rank/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "g1rank/errors.hpp"
#include "g1rank/numeric.hpp"

namespace g1rank {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw BadSpec("permutation images are not a bijection");
    seen[v] = true;
  }
  if (img_.empty()) throw BadSpec("permutation degree must be at least 1");
}

Permutation Permutation::identity(int degree) {
  std::vector<int> v(degree);
  for (int i = 0; i < degree; ++i) v[i] = i;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  int64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int64_t len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = lcm64(ord, len);
  }
  return ord;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw BadSpec("permutation degree mismatch");
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[i] = img_[rhs.img_[i]];
  return Permutation(std::move(v));
}

Permutation Permutation::power(int64_t k) const {
  int64_t o = order();
  k %= o;
  if (k < 0) k += o;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw BadSpec("cannot shrink a permutation");
  std::vector<int> v(new_degree);
  for (int i = 0; i < new_degree; ++i) v[i] = i < degree() ? img_[i] : i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(const std::string& text,
                                      int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw BadSpec("empty permutation");
  int max_point = min_degree;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw BadSpec("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) throw BadSpec("expected a point number in cycle");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1) throw BadSpec("points are 1-based");
      cyc.push_back(pt);
      max_point = std::max(max_point, pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw BadSpec("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<int> img(max_point);
  for (int p = 0; p < max_point; ++p) img[p] = p;
  std::set<int> used;
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1;
      int to = cyc[(k + 1) % cyc.size()] - 1;
      if (!used.insert(from).second)
        throw BadSpec("cycles are not disjoint at point " +
                      std::to_string(from + 1));
      img[from] = to;  // a 1-cycle just mentions a fixed point
    }
  }
  return Permutation(std::move(img));
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ',';
      out << j + 1;
      first = false;
      seen[j] = true;
      j = img_[j];
    } while (j != i);
    out << ')';
  }
  return any ? out.str() : "()";
}

int Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

Group generate_group(const std::vector<Permutation>& generators, int64_t cap,
                     std::optional<int> degree) {
  if (cap < 1) throw BadSpec("cap must be at least 1");
  if (generators.empty()) {
    if (!degree) throw EmptyGenerators("no generators and no degree given");
    Group g;
    g.degree = *degree;
    g.elements.push_back(Permutation::identity(*degree));
    return g;
  }
  int deg = generators.front().degree();
  for (const auto& p : generators)
    if (p.degree() != deg)
      throw BadSpec("generators do not share one degree");

  // Breadth-first closure from the identity, generators in given order.
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(deg);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators) {
      Permutation y = x * gen;
      if (seen.insert(y).second) {
        if (static_cast<int64_t>(seen.size()) > cap)
          throw CapExceeded("group closure exceeds cap " +
                            std::to_string(cap));
        frontier.push_back(std::move(y));
      }
    }
  }
  Group g;
  g.degree = deg;
  g.generators = generators;
  g.elements.assign(seen.begin(), seen.end());  // set order = lexicographic
  return g;
}

ClassData conjugacy_classes(const Group& g) {
  int n = static_cast<int>(g.elements.size());
  std::vector<int> cls(n, -1);
  std::vector<ConjClass> classes;
  // Precompute generator inverses once.
  std::vector<std::pair<Permutation, Permutation>> conj;
  conj.reserve(g.generators.size());
  for (const auto& h : g.generators) conj.emplace_back(h, h.inverse());

  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> members;
    std::deque<int> frontier{i};
    cls[i] = id;
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop_front();
      members.push_back(x);
      for (const auto& [h, hinv] : conj) {
        Permutation y = h * g.elements[x] * hinv;
        int yi = g.index_of(y);
        if (cls[yi] < 0) {
          cls[yi] = id;
          frontier.push_back(yi);
        }
      }
    }
    std::sort(members.begin(), members.end());
    ConjClass c;
    c.representative = g.elements[members.front()];  // minimal member
    c.size = static_cast<int64_t>(members.size());
    c.element_order = g.elements[members.front()].order();
    c.members = std::move(members);
    classes.push_back(std::move(c));
  }
  // Canonical order: (element_order, size, minimal member).
  std::vector<int> perm(classes.size());
  for (size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& ca = classes[a];
    const auto& cb = classes[b];
    if (ca.element_order != cb.element_order)
      return ca.element_order < cb.element_order;
    if (ca.size != cb.size) return ca.size < cb.size;
    return ca.representative < cb.representative;
  });
  ClassData cd;
  cd.classes.reserve(classes.size());
  std::vector<int> newpos(classes.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    newpos[perm[k]] = static_cast<int>(k);
    cd.classes.push_back(std::move(classes[perm[k]]));
  }
  cd.class_of.resize(n);
  for (int i = 0; i < n; ++i) cd.class_of[i] = newpos[cls[i]];
  return cd;
}

int64_t element_order(const Group& g, const Permutation& x) {
  if (!g.contains(x)) throw NotAMember("element is not in the group");
  return x.order();
}

std::vector<int> class_power_map(const Group& g, const ClassData& cd,
                                 int64_t k) {
  std::vector<int> map(cd.classes.size());
  for (size_t c = 0; c < cd.classes.size(); ++c) {
    Permutation p = cd.classes[c].representative.power(k);
    map[c] = cd.class_of[g.index_of(p)];
  }
  return map;
}

int64_t exponent(const Group& g) {
  int64_t e = 1;
  for (const auto& x : g.elements) e = lcm64(e, x.order());
  return e;
}

bool is_abelian(const Group& g) {
  for (const auto& a : g.generators)
    for (const auto& b : g.generators)
      if (!(a * b == b * a)) return false;
  return true;
}

bool is_nilpotent(const Group& g) {
  int64_t n = g.order();
  for (auto [p, e] : factorize(n)) {
    int64_t sylow = 1;
    for (int i = 0; i < e; ++i) sylow *= p;
    int64_t p_elements = 0;
    for (const auto& x : g.elements) {
      int64_t o = x.order();
      while (o % p == 0) o /= p;
      if (o == 1) ++p_elements;
    }
    if (p_elements != sylow) return false;
  }
  return true;
}

}  // namespace g1rank
