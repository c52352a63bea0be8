#include "g1rank/ranks.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "g1rank/chartab.hpp"
#include "g1rank/errors.hpp"
#include "g1rank/modular.hpp"
#include "g1rank/numeric.hpp"
#include "g1rank/ratrep.hpp"
#include "g1rank/splitting.hpp"

namespace g1rank {

using json = nlohmann::ordered_json;

RankReport analyze(const Group& g, const std::string& name) {
  return analyze(g, character_table(g), name);
}

RankReport analyze(const Group& g, const CharacterTable& tab,
                   const std::string& name) {
  std::vector<RationalIrrep> irreps = rational_irreps(tab);
  std::vector<int64_t> primes = prime_divisors(g.order());

  RankReport report;
  report.group_name = name;
  report.group_order = g.order();
  report.group_exponent = tab.group_exponent;
  report.class_count = tab.class_count();
  report.dixon_prime = tab.dixon_prime;
  report.abelian = is_abelian(g);
  report.nilpotent = is_nilpotent(g);

  int64_t sum_r = 0, sum_v = 0, sum_w = 0;
  for (auto& rho : irreps) {
    rho.v = count_primes_dividing(rho.field, report.group_order);
    rho.w = count_primes_dividing(rho.field, rho.omega);
    for (int64_t p : primes)
      rho.t_by_prime[p] = primes_above_count(rho.field, p);

    RankRow row;
    row.orbit_size = static_cast<int64_t>(rho.orbit.size());
    row.field = rho.field.str();
    row.field_degree = rho.field.degree;
    row.totally_real = rho.field.totally_real;
    row.unit_rank = rho.unit_rank;
    row.kernel_order = rho.kernel_order;
    row.complex_degree = rho.complex_degree;
    row.omega = rho.omega;
    row.v = rho.v;
    row.w = rho.w;
    row.t_by_prime = rho.t_by_prime;
    report.rows.push_back(std::move(row));

    sum_r += rho.unit_rank;
    sum_v += rho.v;
    sum_w += rho.w;
  }

  for (int64_t p : primes) {
    FpClassReport fp = fp_class_report(g, tab.classes, p);
    report.berman[p] = fp.fused_class_count;
    TheoremBData tb;
    tb.lhs = fp.fused_class_count;
    for (const auto& row : report.rows)
      if (row.omega % p != 0) tb.rhs += row.t_by_prime.at(p);
    report.theorem_b[p] = tb;
  }
  report.epsilon_value = 0;
  for (const auto& [p, count] : report.berman) report.epsilon_value += count;

  report.R = sum_r + sum_v - report.epsilon_value;
  report.P = sum_r + sum_w;
  report.difference = report.P - report.R;
  report.required_w_total = sum_v - report.epsilon_value;
  if (report.difference != sum_w - sum_v + report.epsilon_value)
    throw InternalError("P - R disagrees with sum w - sum v + epsilon");
  theorem_b_margins(report);  // validates every margin
  if (report.difference < 0)
    throw NegativeMargin("P - R is negative for " + name);
  return report;
}

std::map<int64_t, int64_t> theorem_b_margins(const RankReport& report) {
  std::map<int64_t, int64_t> margins;
  for (const auto& [p, tb] : report.theorem_b) {
    int64_t margin = tb.lhs - tb.rhs;
    if (margin < 0)
      throw NegativeMargin("negative counting margin at p = " +
                           std::to_string(p) + " for " + report.group_name);
    margins[p] = margin;
  }
  return margins;
}

ScanResult scan(const std::vector<CatalogEntry>& entries, int64_t max_order,
                int64_t cap) {
  ScanResult result;
  for (const auto& entry : entries) {
    ScanItem item;
    item.name = entry.name;
    try {
      Group g = generate_group(entry.generators, cap);
      item.order = g.order();
      if (g.order() > max_order) {
        item.status = ScanItem::Status::skipped;
      } else {
        item.report = analyze(g, entry.name);
        item.status = ScanItem::Status::ok;
        if (item.report->difference > 0) {
          result.violators.push_back(entry.name);
          if (g.order() % 2 == 1)
            result.odd_order_violators.push_back(entry.name);
        }
      }
    } catch (const Error& e) {
      item.status = ScanItem::Status::error;
      item.error = e.what();
    }
    result.items.push_back(std::move(item));
  }
  return result;
}

namespace {

json row_to_json(const RankRow& row) {
  json t = json::object();
  for (const auto& [p, count] : row.t_by_prime)
    t[std::to_string(p)] = count;
  return json{{"orbit_size", row.orbit_size},
              {"field", row.field},
              {"field_degree", row.field_degree},
              {"totally_real", row.totally_real},
              {"r", row.unit_rank},
              {"k", row.kernel_order},
              {"d", row.complex_degree},
              {"omega", row.omega},
              {"v", row.v},
              {"w", row.w},
              {"t_by_prime", t}};
}

json report_to_json_value(const RankReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) rows.push_back(row_to_json(row));
  json berman = json::object();
  for (const auto& [p, count] : report.berman)
    berman[std::to_string(p)] = count;
  json theorem_b = json::object();
  for (const auto& [p, tb] : report.theorem_b)
    theorem_b[std::to_string(p)] = json{
        {"lhs", tb.lhs}, {"rhs", tb.rhs}, {"margin", tb.lhs - tb.rhs}};
  return json{{"name", report.group_name},
              {"order", report.group_order},
              {"exponent", report.group_exponent},
              {"classes", report.class_count},
              {"dixon_prime", report.dixon_prime},
              {"abelian", report.abelian},
              {"nilpotent", report.nilpotent},
              {"rows", rows},
              {"berman", berman},
              {"epsilon", report.epsilon_value},
              {"R", report.R},
              {"P", report.P},
              {"difference", report.difference},
              {"theorem_b", theorem_b},
              {"required_w_total", report.required_w_total}};
}

void render_aligned(std::ostringstream& out,
                    const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
}

std::string t_by_prime_str(const std::map<int64_t, int64_t>& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, count] : t) {
    if (!first) out << ' ';
    out << p << ':' << count;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string report_to_json(const RankReport& report) {
  return report_to_json_value(report).dump(2) + "\n";
}

std::string report_to_table(const RankReport& report) {
  std::ostringstream out;
  out << "group: " << report.group_name << "  order: " << report.group_order
      << "  exponent: " << report.group_exponent
      << "  classes: " << report.class_count
      << "  dixon prime: " << report.dixon_prime << '\n';
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"rho", "orbit", "E", "m", "real", "r", "k", "d", "omega",
                   "v", "w", "t_p"});
  int i = 0;
  for (const auto& row : report.rows) {
    cells.push_back({std::to_string(++i), std::to_string(row.orbit_size),
                     row.field, std::to_string(row.field_degree),
                     row.totally_real ? "yes" : "no",
                     std::to_string(row.unit_rank),
                     std::to_string(row.kernel_order),
                     std::to_string(row.complex_degree),
                     std::to_string(row.omega), std::to_string(row.v),
                     std::to_string(row.w), t_by_prime_str(row.t_by_prime)});
  }
  render_aligned(out, cells);
  out << "berman: " << t_by_prime_str(report.berman) << '\n';
  out << "epsilon: " << report.epsilon_value << '\n';
  out << "R=" << report.R << " P=" << report.P
      << " diff=" << report.difference << '\n';
  out << "theorem B:";
  for (const auto& [p, tb] : report.theorem_b)
    out << "  p=" << p << " lhs=" << tb.lhs << " rhs=" << tb.rhs
        << " margin=" << tb.lhs - tb.rhs;
  out << '\n';
  out << "required_w_total: " << report.required_w_total << '\n';
  return out.str();
}

std::string scan_to_json(const ScanResult& result) {
  json items = json::array();
  for (const auto& item : result.items) {
    json j = json::object();
    j["name"] = item.name;
    switch (item.status) {
      case ScanItem::Status::ok:
        j["status"] = "ok";
        j["report"] = report_to_json_value(*item.report);
        break;
      case ScanItem::Status::skipped:
        j["status"] = "skipped";
        j["order"] = item.order;
        break;
      case ScanItem::Status::error:
        j["status"] = "error";
        j["error"] = item.error;
        break;
    }
    items.push_back(std::move(j));
  }
  json out{{"items", items},
           {"violators", result.violators},
           {"odd_order_violators", result.odd_order_violators}};
  return out.dump(2) + "\n";
}

std::string scan_to_table(const ScanResult& result) {
  std::ostringstream out;
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"name", "order", "R", "P", "diff"});
  for (const auto& item : result.items) {
    switch (item.status) {
      case ScanItem::Status::ok:
        cells.push_back({item.name, std::to_string(item.order),
                         std::to_string(item.report->R),
                         std::to_string(item.report->P),
                         std::to_string(item.report->difference)});
        break;
      case ScanItem::Status::skipped:
        cells.push_back({item.name, std::to_string(item.order), "-", "-",
                         "skipped (above max order)"});
        break;
      case ScanItem::Status::error:
        cells.push_back({item.name, "-", "-", "-", "error: " + item.error});
        break;
    }
  }
  render_aligned(out, cells);
  for (const auto& name : result.violators) {
    out << "violator: " << name << '\n';
  }
  for (const auto& name : result.odd_order_violators) {
    out << "!! odd-order violator: " << name << '\n';
  }
  out << "violators: " << result.violators.size() << '\n';
  return out.str();
}

}  // namespace g1rank
