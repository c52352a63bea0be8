#include "g1rank/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "g1rank/catalog.hpp"
#include "g1rank/chartab.hpp"
#include "g1rank/errors.hpp"
#include "g1rank/ranks.hpp"
#include "g1rank/ratrep.hpp"
#include "g1rank/splitting.hpp"

namespace g1rank {

namespace {

using json = nlohmann::ordered_json;

Group group_from_spec(const std::string& spec_text, int64_t cap) {
  GroupSpec spec = parse_group_spec(spec_text);
  return generate_group(construct(spec), cap);
}

std::string render_units(const std::vector<int64_t>& units) {
  std::ostringstream out;
  for (size_t i = 0; i < units.size(); ++i)
    out << (i ? " " : "") << units[i];
  return out.str();
}

std::string chartab_table(const CharacterTable& tab,
                          const std::string& name) {
  std::ostringstream out;
  out << "group: " << name << "  order: " << tab.group_order
      << "  exponent: " << tab.group_exponent
      << "  dixon prime: " << tab.dixon_prime << '\n';
  int k = tab.class_count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"class:"}, sizes{"size:"}, orders{"order:"};
  for (int c = 0; c < k; ++c) {
    header.push_back(std::to_string(c + 1));
    sizes.push_back(std::to_string(tab.classes.classes[c].size));
    orders.push_back(std::to_string(tab.classes.classes[c].element_order));
  }
  header.push_back("");
  sizes.push_back("");
  orders.push_back("");
  cells.push_back(header);
  cells.push_back(sizes);
  cells.push_back(orders);
  for (size_t i = 0; i < tab.characters.size(); ++i) {
    std::vector<std::string> row{"chi_" + std::to_string(i + 1) + ":"};
    for (const auto& v : tab.characters[i].values)
      row.push_back(v.reduced().str());
    row.push_back(
        "| " + field_descriptor(tab.characters[i], tab.group_exponent).str());
    cells.push_back(std::move(row));
  }
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
  return out.str();
}

std::string chartab_json(const CharacterTable& tab, const std::string& name) {
  json classes = json::array();
  for (const auto& c : tab.classes.classes)
    classes.push_back(json{{"size", c.size}, {"order", c.element_order}});
  json chars = json::array();
  for (const auto& chi : tab.characters) {
    json values = json::array();
    for (const auto& v : chi.values) values.push_back(v.reduced().str());
    chars.push_back(
        json{{"degree", chi.degree},
             {"values", values},
             {"field", field_descriptor(chi, tab.group_exponent).str()}});
  }
  json out{{"name", name},
           {"order", tab.group_order},
           {"exponent", tab.group_exponent},
           {"dixon_prime", tab.dixon_prime},
           {"classes", classes},
           {"characters", chars}};
  return out.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact rank computations for G_1 of integral group rings"};
  app.require_subcommand(1);

  std::string output = "table";
  int64_t cap = kDefaultGroupCap;
  app.add_option("--output", output, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--cap", cap, "group order cap for closure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string analyze_spec;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "compute R(G), P(G) and the per-prime data for one group");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("spec", analyze_spec,
                          "group spec, e.g. sl2_3, cyclic:6, dihedral:8, "
                          "symmetric:5, or products like 'cyclic:2 x "
                          "cyclic:4'")
      ->required();

  std::string chartab_spec;
  auto* chartab_cmd = app.add_subcommand(
      "chartab", "print the complex irreducible character table");
  chartab_cmd->fallthrough();
  chartab_cmd->add_option("spec", chartab_spec, "group spec")->required();

  std::string catalog_path;
  int64_t max_order = 200;
  auto* scan_cmd =
      app.add_subcommand("scan", "analyze every group in a catalog file");
  scan_cmd->fallthrough();
  scan_cmd->add_option("--catalog", catalog_path, "catalog file")->required();
  scan_cmd->add_option("--max-order", max_order, "skip groups above this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int64_t split_level = 1;
  int64_t split_prime = 2;
  std::vector<int64_t> split_stabilizer;
  auto* split_cmd = app.add_subcommand(
      "split", "decomposition data of a prime in a cyclotomic subfield");
  split_cmd->fallthrough();
  split_cmd->add_option("--level", split_level, "cyclotomic level n")
      ->required()
      ->check(CLI::PositiveNumber);
  split_cmd->add_option("--prime", split_prime, "rational prime p")
      ->required()
      ->check(CLI::PositiveNumber);
  split_cmd
      ->add_option("--stabilizer", split_stabilizer,
                   "generators of the fixing subgroup H (comma separated)")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      Group g = group_from_spec(analyze_spec, cap);
      RankReport report = analyze(g, analyze_spec);
      out << (output == "json" ? report_to_json(report)
                               : report_to_table(report));
    } else if (*chartab_cmd) {
      Group g = group_from_spec(chartab_spec, cap);
      CharacterTable tab = character_table(g);
      out << (output == "json" ? chartab_json(tab, chartab_spec)
                               : chartab_table(tab, chartab_spec));
    } else if (*scan_cmd) {
      std::vector<CatalogEntry> entries = load_catalog_file(catalog_path);
      ScanResult result = scan(entries, max_order, cap);
      out << (output == "json" ? scan_to_json(result)
                               : scan_to_table(result));
    } else if (*split_cmd) {
      if (!is_prime(split_prime)) throw BadSpec("--prime must be prime");
      std::vector<int64_t> h = unit_subgroup(split_level, split_stabilizer);
      AbelianFieldDescriptor field =
          field_from_stabilizer(split_level, std::move(h));
      DecompositionData d = decomposition_data(split_level, split_prime);
      SplitShape shape = split_shape(field, split_prime);
      if (output == "json") {
        json j{{"level", split_level},
               {"prime", split_prime},
               {"field", field.str()},
               {"field_degree", field.degree},
               {"stabilizer", field.stabilizer},
               {"inertia", d.inertia},
               {"frobenius", d.frobenius},
               {"decomposition", d.decomposition},
               {"ramification", shape.ramification},
               {"residue_degree", shape.residue_degree},
               {"primes_above", shape.primes}};
        out << j.dump(2) << "\n";
      } else {
        out << "level: " << split_level << "  prime: " << split_prime
            << "  field: " << field.str() << "  degree: " << field.degree
            << '\n';
        out << "stabilizer H: " << render_units(field.stabilizer) << '\n';
        out << "inertia I: " << render_units(d.inertia) << '\n';
        out << "frobenius: " << d.frobenius << '\n';
        out << "decomposition D: " << render_units(d.decomposition) << '\n';
        out << "e: " << shape.ramification << "  f: " << shape.residue_degree
            << "  g: " << shape.primes << '\n';
      }
    }
  } catch (const BadSpec& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotAUnit& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace g1rank
