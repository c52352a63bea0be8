#ifndef G1RANK_RANKS_HPP
#define G1RANK_RANKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g1rank/catalog.hpp"
#include "g1rank/chartab.hpp"
#include "g1rank/perm.hpp"

namespace g1rank {

/// One rational irreducible representation in a report.
struct RankRow {
  int64_t orbit_size = 1;
  std::string field;  // rendered E_rho
  int64_t field_degree = 1;
  bool totally_real = true;
  int64_t unit_rank = 0;    // r_rho
  int64_t kernel_order = 1; // k_rho
  int64_t complex_degree = 1;  // d_rho
  int64_t omega = 1;
  int64_t v = 0;
  int64_t w = 0;
  std::map<int64_t, int64_t> t_by_prime;
};

struct TheoremBData {
  int64_t lhs = 0;  // Berman count
  int64_t rhs = 0;  // sum of t_rho over omega coprime to p
};

/// Everything the rank formulas produce for one group:
///   R = sum(r + v) - epsilon   (the actual rank of G_1(ZG))
///   P = sum(r + w)             (the rank the HTW-decomposition predicts)
struct RankReport {
  std::string group_name;
  int64_t group_order = 1;
  int64_t group_exponent = 1;
  int64_t class_count = 1;
  int64_t dixon_prime = 3;
  std::vector<RankRow> rows;
  std::map<int64_t, int64_t> berman;  // p -> fused class count
  int64_t epsilon_value = 0;
  int64_t R = 0;
  int64_t P = 0;
  int64_t difference = 0;  // P - R, never negative
  std::map<int64_t, TheoremBData> theorem_b;
  int64_t required_w_total = 0;  // sum v - epsilon
  bool abelian = false;
  bool nilpotent = false;
};

RankReport analyze(const Group& g, const std::string& name);
/// Same, reusing an already computed character table.
RankReport analyze(const Group& g, const CharacterTable& tab,
                   const std::string& name);

/// Per-prime slack lhs - rhs; throws NegativeMargin if any is negative
/// (that would contradict the counting inequality).
std::map<int64_t, int64_t> theorem_b_margins(const RankReport& report);

struct ScanItem {
  std::string name;
  enum class Status { ok, skipped, error } status = Status::ok;
  int64_t order = 0;  // 0 when generation itself failed
  std::optional<RankReport> report;
  std::string error;
};

struct ScanResult {
  std::vector<ScanItem> items;
  std::vector<std::string> violators;           // difference > 0
  std::vector<std::string> odd_order_violators; // should stay empty
};

/// Reports in catalog order; entries above max_order are skipped;
/// per-entry errors are recorded and the scan continues.
ScanResult scan(const std::vector<CatalogEntry>& entries, int64_t max_order,
                int64_t cap = kDefaultGroupCap);

std::string report_to_json(const RankReport& report);
std::string report_to_table(const RankReport& report);
std::string scan_to_json(const ScanResult& result);
std::string scan_to_table(const ScanResult& result);

}  // namespace g1rank

#endif
