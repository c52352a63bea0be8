#include "g1rank/modular.hpp"

#include <algorithm>
#include <set>

#include "g1rank/errors.hpp"
#include "g1rank/numeric.hpp"

namespace g1rank {

namespace {

// Orbit count of the maps {class -> power_maps[t](class)} on the given
// class subset; every map permutes the subset.
int64_t fusion_orbit_count(const std::vector<int>& subset,
                           const std::vector<std::vector<int>>& power_maps) {
  std::set<int> todo(subset.begin(), subset.end());
  int64_t orbits = 0;
  while (!todo.empty()) {
    ++orbits;
    std::vector<int> frontier{*todo.begin()};
    todo.erase(todo.begin());
    while (!frontier.empty()) {
      int c = frontier.back();
      frontier.pop_back();
      for (const auto& pm : power_maps) {
        int image = pm[c];
        if (todo.erase(image)) frontier.push_back(image);
      }
    }
  }
  return orbits;
}

}  // namespace

FpClassReport fp_class_report(const Group& g, const ClassData& cd,
                              int64_t p) {
  if (!is_prime(p)) throw BadSpec("fp_class_report: p must be prime");
  FpClassReport report;
  report.prime = p;
  for (int c = 0; c < cd.count(); ++c)
    if (cd.classes[c].element_order % p != 0)
      report.regular_class_indices.push_back(c);
  report.d = 1;
  for (int c : report.regular_class_indices)
    report.d = lcm64(report.d, cd.classes[c].element_order);
  // T = {p^i mod d}; p is a unit mod d since d is coprime to p
  int64_t d = report.d;
  int64_t t = d == 1 ? 0 : p % d;
  std::set<int64_t> exponents;
  do {
    exponents.insert(t);
    t = d == 1 ? 0 : mulmod(t, p % d, d);
  } while (!exponents.count(t));
  report.exponent_group.assign(exponents.begin(), exponents.end());

  std::vector<std::vector<int>> fusion_maps;
  for (int64_t exp : report.exponent_group)
    fusion_maps.push_back(class_power_map(g, cd, exp));
  report.fused_class_count =
      fusion_orbit_count(report.regular_class_indices, fusion_maps);

  // the single map C -> C^p, iterated, must fuse identically (T is
  // generated by p mod d)
  std::vector<std::vector<int>> p_map{class_power_map(g, cd, p)};
  if (fusion_orbit_count(report.regular_class_indices, p_map) !=
      report.fused_class_count)
    throw InternalError("F_p-fusion differs between the exponent-group "
                        "method and iterated p-th powers");
  return report;
}

int64_t epsilon(const Group& g, const ClassData& cd) {
  int64_t total = 0;
  for (int64_t p : prime_divisors(g.order()))
    total += fp_class_report(g, cd, p).fused_class_count;
  return total;
}

}  // namespace g1rank
