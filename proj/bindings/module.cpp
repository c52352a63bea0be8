#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>
#include <sstream>

#include "g1rank/catalog.hpp"
#include "g1rank/chartab.hpp"
#include "g1rank/cli.hpp"
#include "g1rank/errors.hpp"
#include "g1rank/ranks.hpp"
#include "g1rank/ratrep.hpp"
#include "g1rank/splitting.hpp"

namespace py = pybind11;
using namespace g1rank;

namespace {

Group build_group(const std::string& spec, int64_t cap) {
  return generate_group(construct(parse_group_spec(spec)), cap);
}

std::string analyze_json(const std::string& spec, int64_t cap) {
  Group g = build_group(spec, cap);
  return report_to_json(analyze(g, spec));
}

std::string analyze_table(const std::string& spec, int64_t cap) {
  Group g = build_group(spec, cap);
  return report_to_table(analyze(g, spec));
}

std::string scan_json(const std::string& catalog_text, int64_t max_order,
                      int64_t cap) {
  return scan_to_json(scan(parse_catalog_text(catalog_text), max_order, cap));
}

std::string scan_table(const std::string& catalog_text, int64_t max_order,
                       int64_t cap) {
  return scan_to_table(
      scan(parse_catalog_text(catalog_text), max_order, cap));
}

py::dict chartab_dict(const std::string& spec, int64_t cap) {
  Group g = build_group(spec, cap);
  CharacterTable tab = character_table(g);
  py::dict out;
  out["name"] = spec;
  out["order"] = tab.group_order;
  out["exponent"] = tab.group_exponent;
  out["dixon_prime"] = tab.dixon_prime;
  py::list sizes, orders;
  for (const auto& c : tab.classes.classes) {
    sizes.append(c.size);
    orders.append(c.element_order);
  }
  out["class_sizes"] = sizes;
  out["class_orders"] = orders;
  py::list rows;
  for (const auto& chi : tab.characters) {
    py::list values;
    for (const auto& v : chi.values) values.append(v.str());
    py::dict row;
    row["degree"] = chi.degree;
    row["values"] = values;
    row["field"] = field_descriptor(chi, tab.group_exponent).str();
    rows.append(row);
  }
  out["characters"] = rows;
  return out;
}

py::dict split_dict(int64_t level, const std::vector<int64_t>& stabilizer,
                    int64_t p) {
  AbelianFieldDescriptor field =
      field_from_stabilizer(level, unit_subgroup(level, stabilizer));
  DecompositionData d = decomposition_data(level, p);
  SplitShape shape = split_shape(field, p);
  py::dict out;
  out["level"] = level;
  out["prime"] = p;
  out["field"] = field.str();
  out["field_degree"] = field.degree;
  out["stabilizer"] = field.stabilizer;
  out["inertia"] = d.inertia;
  out["frobenius"] = d.frobenius;
  out["decomposition"] = d.decomposition;
  out["ramification"] = shape.ramification;
  out["residue_degree"] = shape.residue_degree;
  out["primes_above"] = shape.primes;
  return out;
}

int run_main(const std::vector<std::string>& args) {
  int code = run_cli(args, std::cout, std::cerr);
  std::cout.flush();
  std::cerr.flush();
  return code;
}

}  // namespace

PYBIND11_MODULE(_g1rank, m) {
  m.doc() = "exact rank computations for G_1 of integral group rings";

  py::register_exception<Error>(m, "G1RankError");

  m.def("analyze_json", &analyze_json, py::arg("spec"),
        py::arg("cap") = kDefaultGroupCap,
        "analyze a group spec; returns the rank report as a JSON string");
  m.def("analyze_table", &analyze_table, py::arg("spec"),
        py::arg("cap") = kDefaultGroupCap,
        "analyze a group spec; returns the human-readable table");
  m.def("scan_json", &scan_json, py::arg("catalog_text"),
        py::arg("max_order") = 200, py::arg("cap") = kDefaultGroupCap,
        "scan a catalog given as text; returns JSON");
  m.def("scan_table", &scan_table, py::arg("catalog_text"),
        py::arg("max_order") = 200, py::arg("cap") = kDefaultGroupCap,
        "scan a catalog given as text; returns the table");
  m.def("chartab", &chartab_dict, py::arg("spec"),
        py::arg("cap") = kDefaultGroupCap,
        "character table of a group spec as a dict of rendered values");
  m.def("split", &split_dict, py::arg("level"), py::arg("stabilizer"),
        py::arg("prime"),
        "decomposition data of a prime in the fixed field of the subgroup "
        "generated by `stabilizer` inside Q(zeta_level)");
  m.def("run_cli", &run_main, py::arg("args"),
        "run the command-line driver in-process");
}
