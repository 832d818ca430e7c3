// rackkit: finite racks and quandles as sequences of permutations.
//
// Exit codes: 0 success, 1 domain failure (input is not a rack, racks are
// not isomorphic, ...), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rackkit/classify.hpp"
#include "rackkit/coloring.hpp"
#include "rackkit/enumerate.hpp"
#include "rackkit/invariants.hpp"
#include "rackkit/io.hpp"
#include "rackkit/iso.hpp"
#include "rackkit/rack.hpp"

namespace {

using nlohmann::json;
using namespace rackkit;

constexpr int kExitSuccess = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

RackFormat parse_format(const std::string& name) {
  if (name == "table") return RackFormat::table;
  if (name == "json") return RackFormat::json;
  if (name == "cycles") return RackFormat::cycles;
  throw CLI::ValidationError("--format", "expected table, json or cycles");
}

// Builder shorthand: R<n>, T<n>, C<n>, octahedron, Z<p>t<m> (linear
// Alexander); anything else is taken as a file path.
std::optional<Rack> rack_from_shorthand(const std::string& spec) {
  auto num = [](const std::string& s) { return std::stoi(s); };
  try {
    if (spec == "octahedron") return octahedron_quandle();
    if (spec.size() >= 2 && (spec[0] == 'R' || spec[0] == 'T' || spec[0] == 'C')) {
      int n = num(spec.substr(1));
      if (spec[0] == 'R') return dihedral_rack(n);
      if (spec[0] == 'T') return trivial_rack(n);
      return cyclic_rack(n);
    }
    if (spec.size() >= 4 && spec[0] == 'Z') {
      std::size_t t = spec.find('t');
      if (t != std::string::npos)
        return linear_alexander(num(spec.substr(1, t - 1)), num(spec.substr(t + 1)));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

Rack load_rack(const std::string& spec) {
  if (auto rack = rack_from_shorthand(spec)) return *rack;
  return rack_from_text_checked(read_file(spec));
}

json rack_json_doc(const Rack& r) { return json::parse(rack_to_json(r)); }

int run_build(const std::vector<std::string>& args, RackFormat format) {
  const std::string& name = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw CLI::ValidationError("build", "wrong number of parameters for " + name);
  };
  Rack rack = [&]() -> Rack {
    if (name == "dihedral") {
      need(1);
      return dihedral_rack(std::stoi(args[1]));
    }
    if (name == "trivial") {
      need(1);
      return trivial_rack(std::stoi(args[1]));
    }
    if (name == "cyclic") {
      need(1);
      return cyclic_rack(std::stoi(args[1]));
    }
    if (name == "alexander") {
      need(2);
      return linear_alexander(std::stoi(args[1]), std::stoi(args[2]));
    }
    if (name == "alexander-quotient") {
      need(2);
      std::vector<int> coeffs;
      std::string text = args[2];
      for (std::size_t pos = 0; pos < text.size();) {
        std::size_t comma = text.find(',', pos);
        coeffs.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma == std::string::npos ? text.size() : comma + 1;
      }
      return alexander_quotient(std::stoi(args[1]), coeffs);
    }
    if (name == "octahedron") {
      need(0);
      return octahedron_quandle();
    }
    throw CLI::ValidationError("build", "unknown builder " + name);
  }();
  std::cout << rack_to_text(rack, format);
  return kExitSuccess;
}

int run_validate(const std::string& path) {
  auto result = rack_from_text(read_file(path));
  if (auto* report = std::get_if<ValidationReport>(&result)) {
    std::cout << "not a rack\n" << describe(*report);
    return kExitDomain;
  }
  const Rack& rack = std::get<Rack>(result);
  RackKind k = kind(rack);
  std::cout << "valid " << (k.k == 0 ? "quandle" : std::to_string(k.k) + "-prack")
            << " of order " << rack.order() << "\n";
  return kExitSuccess;
}

int run_info(const std::string& path) {
  std::cout << info_json(load_rack(path)) << "\n";
  return kExitSuccess;
}

int run_iso(const std::string& a_path, const std::string& b_path) {
  IsoResult result = are_isomorphic(load_rack(a_path), load_rack(b_path));
  if (!result.isomorphic) {
    std::cout << "not isomorphic\n";
    return kExitDomain;
  }
  std::cout << "isomorphic via " << format_cycles(*result.witness) << "\n";
  return kExitSuccess;
}

int run_enumerate(int order, const std::string& mode_name, const std::string& out_path,
                  long long budget) {
  EnumMode mode = EnumMode::racks;
  if (mode_name == "quandles") mode = EnumMode::quandles;
  if (mode_name == "pracks") mode = EnumMode::pracks;
  EnumerationReport report = enumerate_racks(order, mode, budget);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  for (const Rack& rack : report.classes) *out << rack_to_json(rack) << "\n";

  json summary;
  summary["order"] = report.order;
  summary["mode"] = to_string(report.mode);
  summary["classes"] = report.classes.size();
  json by_k = json::object();
  for (const auto& [k, count] : report.counts_by_k) by_k[std::to_string(k)] = count;
  summary["counts_by_k"] = by_k;
  json by_profile = json::array();
  for (const auto& [prof, count] : report.counts_by_profile) {
    json patterns = json::array();
    for (const Pattern& p : prof.per_element) patterns.push_back(p.lengths);
    by_profile.push_back({{"profile", patterns}, {"count", count}});
  }
  summary["counts_by_profile"] = by_profile;
  *out << json{{"summary", summary}}.dump() << "\n";
  return kExitSuccess;
}

int run_classify(const std::string& profile_text, int order, bool quandles, bool pracks,
                 RackFormat format) {
  Pattern pattern = parse_constant_profile(profile_text, order);
  const std::vector<int>& parts = pattern.lengths;

  json doc;
  doc["order"] = order;
  doc["profile"] = parts;
  std::vector<Rack> reps;
  long long predicted = 0;
  std::string formula;

  auto take = [&](ClassificationResult result) {
    reps = std::move(result.representatives);
    predicted = result.predicted_count;
    formula = result.formula_name;
  };

  if (quandles) {
    if (parts.size() == 2 && parts[0] == 1 && parts[1] == order - 1) {
      reps = quandle_search_1_nm1(order);
      predicted = static_cast<long long>(reps.size());
      formula = "quandle_search_1_nm1";
    } else {
      throw CLI::ValidationError(
          "classify", "quandle classification covers profile {1, n-1} only; "
                      "use the enumerate command for other profiles");
    }
    doc["mode"] = "quandles";
  } else if (pracks) {
    doc["mode"] = "pracks";
    if (parts.size() == 1 && parts[0] == order) {
      take(classify_full_cycle(order));
    } else if (parts.size() == 2 && parts[0] == 1) {
      take(classify_prack_1_nm1(order));
    } else if (parts.size() == 2 && parts[0] > 1) {
      take(classify_prack_m_nm(order, parts[0]));
    } else if (parts.size() == 3 && parts[0] > 1 && parts[0] < parts[1] &&
               parts[1] < parts[2]) {
      take(classify_prack_three_blocks(parts[0], parts[1], parts[2]));
    } else if (parts.size() > 3 && parts[parts.size() - 2] == 1 &&
               parts.back() > 1) {
      int f = static_cast<int>(parts.size()) - 1;
      take(classify_prack_ones_block(order, f));
    } else {
      throw CLI::ValidationError(
          "classify", "no closed-form family for this profile; "
                      "use the enumerate command");
    }
  } else {
    throw CLI::ValidationError("classify", "pass --quandles or --pracks");
  }

  doc["predicted_count"] = predicted;
  doc["count"] = reps.size();
  if (!formula.empty()) doc["formula"] = formula;
  json list = json::array();
  for (const Rack& rack : reps)
    list.push_back(format == RackFormat::cycles ? json(rack_to_cycles_text(rack))
                                                : rack_json_doc(rack));
  doc["representatives"] = list;
  std::cout << doc.dump() << "\n";
  return kExitSuccess;
}

int run_color(const std::string& pd_path, const std::string& target_spec,
              bool use_mirror) {
  KnotDiagram diagram = parse_pd(read_file(pd_path));
  if (use_mirror) diagram = mirror(diagram);
  Rack target = load_rack(target_spec);
  if (!is_quandle(target))
    std::cerr << "warning: target is a " << kind(target).k
              << "-prack; counts depend on framing\n";
  ColoringCount count = count_colorings(diagram, target);
  json doc;
  doc["total"] = count.total;
  doc["target_order"] = count.target_order;
  std::cout << doc.dump() << "\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite racks and quandles as sequences of permutations"};
  app.require_subcommand(1);

  std::string format_name = "table";

  auto* build = app.add_subcommand("build", "emit a built-in rack");
  std::vector<std::string> build_args;
  build->add_option("name", build_args,
                    "dihedral N | trivial N | cyclic N | alexander P M | "
                    "alexander-quotient N c0,c1,... | octahedron")
      ->required()
      ->expected(1, 3);
  build->add_option("--format", format_name, "table|json|cycles");
  build->add_flag_callback("--table", [&] { format_name = "table"; });
  build->add_flag_callback("--json", [&] { format_name = "json"; });
  build->add_flag_callback("--cycles", [&] { format_name = "cycles"; });

  auto* validate = app.add_subcommand("validate", "check the rack axioms");
  std::string validate_path;
  validate->add_option("file", validate_path, "rack file (json, table or cycles)")
      ->required();

  auto* info = app.add_subcommand("info", "print the invariant summary as JSON");
  std::string info_path;
  info->add_option("rack", info_path, "rack file or builder shorthand (R3, T4, C5, Z5t2, octahedron)")
      ->required();

  auto* iso = app.add_subcommand("iso", "test two racks for isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all isomorphism classes of a small order");
  int enum_order = 0;
  std::string enum_mode = "racks", enum_out;
  long long enum_budget = kDefaultEnumBudget;
  if (const char* env = std::getenv("RACKKIT_ENUM_BUDGET")) enum_budget = std::atoll(env);
  enumerate->add_option("order", enum_order)->required();
  enumerate->add_flag_callback("--racks", [&] { enum_mode = "racks"; });
  enumerate->add_flag_callback("--quandles", [&] { enum_mode = "quandles"; });
  enumerate->add_flag_callback("--pracks", [&] { enum_mode = "pracks"; });
  enumerate->add_option("--out", enum_out, "write JSONL here instead of stdout");
  enumerate->add_option("--budget", enum_budget,
                        "search node budget (default from RACKKIT_ENUM_BUDGET)");

  auto* classify = app.add_subcommand("classify", "representatives for a constant profile");
  std::string classify_profile;
  int classify_order = 0;
  bool classify_quandles = false, classify_pracks = false;
  classify->add_option("--profile", classify_profile, "e.g. \"1,n-1\" or \"2,3,4\"")
      ->required();
  classify->add_option("--order", classify_order)->required();
  classify->add_flag("--quandles", classify_quandles);
  classify->add_flag("--pracks", classify_pracks);
  classify->add_option("--format", format_name, "json|cycles for representatives");

  auto* color = app.add_subcommand("color", "count colorings of a knot diagram");
  std::string color_pd, color_target;
  bool color_mirror = false;
  color->add_option("--pd", color_pd, "PD code file")->required();
  color->add_option("--target", color_target, "rack file or builder shorthand")
      ->required();
  color->add_flag("--mirror", color_mirror, "flip every crossing first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(build_args, parse_format(format_name));
    if (validate->parsed()) return run_validate(validate_path);
    if (info->parsed()) return run_info(info_path);
    if (iso->parsed()) return run_iso(iso_a, iso_b);
    if (enumerate->parsed())
      return run_enumerate(enum_order, enum_mode, enum_out, enum_budget);
    if (classify->parsed())
      return run_classify(classify_profile, classify_order, classify_quandles,
                          classify_pracks, parse_format(format_name));
    if (color->parsed()) return run_color(color_pd, color_target, color_mirror);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
