// Command-line front end.  Exit codes: 0 success, 1 input error, 2 a check
// ran and reported a violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "s1redux.hpp"

namespace {

using namespace s1redux;

std::vector<int> parse_weights(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad weight '" + item + "'");
    }
  }
  if (out.empty()) throw Error(Errc::InvalidInput, "no weights given");
  return out;
}

void print_analysis(const AnalysisBundle& b) {
  std::cout << "weights        " << b.weights.to_string() << "\n";
  std::cout << "level          " << b.level << "\n";
  std::cout << "signs          -" << b.signs.num_negative << " 0:" << b.signs.num_zero << " +" << b.signs.num_positive
            << "\n";
  const auto& d = b.decomposition;
  std::cout << "zero fiber     " << to_string(d.kind);
  if (d.kind == FiberKind::Cone) std::cout << ", link " << d.link_description();
  if (d.flat_factor_dim) std::cout << ", flat factor R^" << d.flat_factor_dim;
  std::cout << "\n";
  std::cout << "reduced dim    " << b.reduced_dim << "\n";
  std::cout << "invariants     " << b.hilbert.generator_count << " generators"
            << (b.hilbert.complete ? "" : " (cut at degree cap)") << "\n";
  if (b.obstruction) {
    std::cout << "obstruction    (" << b.obstruction->l1 << ", " << b.obstruction->l2 << "): " << b.obstruction->status();
    if (!b.obstruction->no_solution()) std::cout << ", " << b.obstruction->survivors.size() << " survivors";
    std::cout << "\n";
  }
  std::cout << "verdict        " << to_string(b.verdict.outcome) << "\n";
  std::cout << "               " << b.verdict.evidence.clause << "\n";
  if (b.verdict.hss_orbifold)
    std::cout << "hss orbifold   " << (*b.verdict.hss_orbifold ? "yes" : "no") << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear circle actions: reduction, invariants, obstruction search and nerve checks"};
  app.require_subcommand(1);

  std::string weights_csv;
  double level = 0.0;
  bool as_json = false;
  int degree_cap = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a weight vector at a level");
  analyze_cmd->add_option("--weights", weights_csv, "Comma-separated integer weights")->required();
  analyze_cmd->add_option("--level", level, "Momentum level a");
  analyze_cmd->add_flag("--json", as_json, "Print the JSON bundle");
  analyze_cmd->add_option("--degree-cap", degree_cap, "Degree cap for the invariant search");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Minimal invariant monomials");
  hilbert_cmd->add_option("--weights", weights_csv, "Comma-separated integer weights")->required();
  hilbert_cmd->add_option("--degree-cap", degree_cap, "Degree cap for the invariant search");

  int l1 = 1, l2 = 1, k_max = 15;
  auto* homotopy_cmd = app.add_subcommand("homotopy", "Obstruction search for link spheres S^l1 x S^l2");
  homotopy_cmd->add_option("--l1", l1, "Odd sphere dimension")->required();
  homotopy_cmd->add_option("--l2", l2, "Odd sphere dimension")->required();
  homotopy_cmd->add_option("--k-max", k_max, "Largest sphere dimension k and degree p");

  std::string input, check;
  bool no_validate = false;
  int n_max = 4;
  auto* nerve_cmd = app.add_subcommand("nerve", "Checks on the nerve of a finite groupoid");
  nerve_cmd->add_option("--input", input, "Groupoid JSON file")->required()->check(CLI::ExistingFile);
  nerve_cmd->add_option("--check", check, "pi1 or simplicial")->required()->check(CLI::IsMember({"pi1", "simplicial"}));
  nerve_cmd->add_option("--n-max", n_max, "Highest level for the simplicial check");
  nerve_cmd->add_flag("--no-validate", no_validate, "Skip groupoid axiom checks on load");

  int audit_n = 5, audit_w = 4;
  auto* audit_cmd = app.add_subcommand("audit", "Exhaustive verdict consistency audit");
  audit_cmd->add_option("--max-n", audit_n, "Largest number of coordinates");
  audit_cmd->add_option("--max-weight", audit_w, "Largest |weight|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    auto cap = [&]() -> std::optional<int> {
      if (degree_cap > 0) return degree_cap;
      return std::nullopt;
    };
    if (*analyze_cmd) {
      const auto bundle = analyze(normalize_effective(parse_weights(weights_csv)), level, cap());
      if (as_json) std::cout << to_json(bundle).dump(2) << "\n";
      else print_analysis(bundle);
      return 0;
    }
    if (*hilbert_cmd) {
      const WeightVector w = normalize_effective(parse_weights(weights_csv));
      const auto basis = invariant_monoid_basis(w, cap());
      json out = to_json(basis);
      out["schema"] = kSchemaVersion;
      out["weights"] = to_json(w);
      json labels = json::array();
      for (const auto& g : real_generators(basis)) labels.push_back(g.label);
      out["realGenerators"] = labels;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*homotopy_cmd) {
      json out = to_json(obstruction_search(l1, l2, k_max));
      out["schema"] = kSchemaVersion;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*nerve_cmd) {
      const json doc = read_json_file(input);
      const FiniteGroupoid g = groupoid_from_json(doc, !no_validate);
      json out = {{"schema", kSchemaVersion}, {"check", check}};
      if (check == "simplicial") {
        const auto rep = check_simplicial_identities(g, n_max);
        out["report"] = to_json(rep);
        std::cout << out.dump(2) << "\n";
        return rep.ok() ? 0 : 2;
      }
      json comps = json::array();
      if (doc.contains("basepoint")) {
        const auto name = doc.at("basepoint").get<std::string>();
        const auto x = g.object_index(name);
        if (!x) throw Error(Errc::InvalidInput, "unknown basepoint '" + name + "'");
        comps.push_back(to_json(g, pi1_of_classifying_space(g, *x)));
      } else {
        const auto label = g.components();
        std::vector<bool> seen(g.num_objects(), false);
        for (int x = 0; x < g.num_objects(); ++x) {
          if (seen[label[x]]) continue;
          seen[label[x]] = true;
          comps.push_back(to_json(g, pi1_of_classifying_space(g, x)));
        }
      }
      out["components"] = comps;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*audit_cmd) {
      const auto rep = consistency_audit(audit_n, audit_w);
      std::cout << to_json(rep).dump(2) << "\n";
      return rep.ok() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cout << json{{"schema", kSchemaVersion}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump(2)
              << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cout << json{{"schema", kSchemaVersion}, {"error", "InvalidInput"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 1;
}
