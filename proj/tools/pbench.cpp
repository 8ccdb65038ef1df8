#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pbench/cli/run.hpp"
#include "pbench/preproj/hilbert.hpp"
#include "pbench/refl/groups.hpp"
#include "pbench/refl/verify.hpp"
#include "pbench/rh/phi.hpp"
#include "pbench/rootdata.hpp"

using namespace pbench;
using cli::ConfigError;

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ConfigError("cannot write " + out_path);
  f << text;
}

nlohmann::json roots_json(const std::string& label) {
  rootdata::RootData rd;
  try {
    rd = rootdata::build_root_data(label);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : rd.edges) edges.push_back({e.source + 1, e.target + 1});
  std::vector<int> perm;
  for (int p : rd.dual_permutation) perm.push_back(p + 1);
  nlohmann::json j{{"type", rd.type_label},
                   {"rank", rd.rank},
                   {"edges", edges},
                   {"cartan", rd.cartan},
                   {"coxeter_number", rd.coxeter_number},
                   {"num_positive_roots", rd.num_positive_roots()},
                   {"positive_roots", rd.positive_roots},
                   {"highest_root", rd.highest_root()},
                   {"dual_permutation", perm},
                   {"dim_pi0", preproj::dim_pi0_formula(rd)}};
  try {
    const auto nd = rootdata::build_nodal_data(rd);
    j["nodal"] = {{"node", nd.node + 1}, {"leg_lengths", nd.leg_lengths}, {"q1", nd.q1}, {"q2", nd.q2},
                  {"group_order", nd.group_order()}};
  } catch (const std::invalid_argument&) {
    j["nodal"] = nullptr;
  }
  return j;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Verification suite for preprojective algebras, fusion identities, reflection groups and monodromy"};
  app.require_subcommand(1);

  // roots
  auto* roots = app.add_subcommand("roots", "Print root data of ADE types");
  std::vector<std::string> root_types;
  roots->add_option("--type,-t", root_types, "Type labels, comma separated")->required();

  // verify and report share most options
  cli::RunConfig cfg;
  std::vector<std::string> checks, types;
  std::string format = "json", out_path, cache_dir, from_path;
  bool no_timing = false, list_checks = false;
  double tol = 0;
  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--seed", cfg.seed, "Seed for sampled weights");
    sc->add_flag("--slow", cfg.slow, "Include slow-tagged inputs");
    sc->add_option("--format,-f", format, "json, csv or markdown");
    sc->add_option("--out,-o", out_path, "Write the report to a file");
    sc->add_option("--cache-dir", cache_dir, "Graded basis cache (default $PBENCH_CACHE_DIR)");
    sc->add_flag("--no-timing", no_timing, "Omit wall times so reports compare byte for byte");
    sc->add_option("--jobs,-j", cfg.jobs, "Parallel checks (0 = hardware threads)");
  };
  auto* verify = app.add_subcommand("verify", "Run selected checks");
  verify->add_option("--checks,-c", checks, "Check ids, comma separated (default all)");
  verify->add_option("--type,-t", types, "Type labels, comma separated, or 'all'");
  verify->add_option("--max-degree", cfg.max_degree, "Truncation bound for pi-truncated");
  verify->add_option("--tol", tol, "Monodromy tolerance (default per type)");
  verify->add_flag("--list", list_checks, "List check ids and exit");
  add_common(verify);

  auto* report = app.add_subcommand("report", "Run every check on its default inputs, or re-render a saved report");
  report->add_option("--from", from_path, "Saved JSON report to render");
  add_common(report);

  // groups
  auto* groups = app.add_subcommand("groups", "Reflection group catalog");
  bool list_groups = false;
  std::vector<std::string> verify_groups;
  groups->add_flag("--list", list_groups, "Print the catalog");
  groups->add_option("--verify", verify_groups, "Group names, comma separated, or 'all'");

  // monodromy
  auto* mono = app.add_subcommand("monodromy", "Monodromy of the Fuchsian system of B(lambda)");
  std::string mono_type, lambda_text = "zero";
  double mono_tol = 1e-8, delta = 0;
  bool with_matrices = false;
  mono->add_option("--type,-t", mono_type, "A3, D4, E6, ...")->required();
  mono->add_option("--lambda", lambda_text, "'zero' or rationals, legs separated by ';'");
  mono->add_option("--tol", mono_tol, "Residual tolerance");
  mono->add_option("--delta", delta, "Loop clearance (default: minimal gap / 4)");
  mono->add_flag("--matrices", with_matrices, "Include the monodromy matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*roots) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : split_list(root_types)) out.push_back(roots_json(t));
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return 0;
  }

  if (*verify || *report) {
    const cli::Format fmt = cli::parse_format(format);
    if (*verify && list_checks) {
      for (const auto& s : cli::check_registry()) std::cout << s.id << "\t" << s.description << "\n";
      return 0;
    }
    if (*report && !from_path.empty()) {
      std::ifstream f(from_path);
      if (!f) throw ConfigError("cannot read " + from_path);
      nlohmann::json j;
      try {
        f >> j;
      } catch (const std::exception& e) {
        throw ConfigError(std::string("bad report file: ") + e.what());
      }
      const auto rep = cli::Report::from_json(j);
      emit(rep.render(fmt), out_path);
      return rep.all_pass() ? 0 : 1;
    }
    if (*verify) {
      cfg.checks = split_list(checks);
      cfg.types = split_list(types);
      if (tol > 0) cfg.tol = tol;
    }
    cfg.cache_dir = cache_dir.empty() ? cli::cache_dir_from_env() : std::optional<std::filesystem::path>(cache_dir);
    cfg.timing = !no_timing;
    const auto rep = cli::run(cfg);
    emit(rep.render(fmt), out_path);
    return rep.all_pass() ? 0 : 1;
  }

  if (*groups) {
    if (list_groups) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& g : refl::group_catalog()) out.push_back(g.to_json());
      std::cout << out.dump(2) << "\n";
      if (verify_groups.empty()) return 0;
    }
    auto names = split_list(verify_groups);
    if (names.empty() && !list_groups) throw ConfigError("groups needs --list or --verify");
    if (std::find(names.begin(), names.end(), "all") != names.end()) names = refl::all_group_names();
    nlohmann::json rows = nlohmann::json::array();
    bool ok = true;
    for (const auto& n : names) {
      const refl::GroupPresentation* g = nullptr;
      try {
        g = &refl::catalog_entry(n);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      const auto t = refl::todd_coxeter(*g);
      const bool pass = t.order() == g->expected_order && refl::relators_hold(*g, t);
      ok = ok && pass;
      rows.push_back({{"group", n},
                      {"expected_order", g->expected_order},
                      {"computed_order", t.order()},
                      {"cosets", t.cosets_defined},
                      {"pass", pass}});
    }
    std::cout << rows.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  if (*mono) {
    rootdata::RootData rd;
    try {
      rd = rootdata::build_root_data(mono_type);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    rh::LegParameters lambda;
    try {
      for (const auto& leg : cli::parse_lambda_text(lambda_text)) {
        std::vector<Rational> row;
        for (const auto& x : leg) row.push_back(parse_rational(x));
        lambda.push_back(row);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad --lambda: ") + e.what());
    }
    rh::PhiOptions o;
    o.tol = mono_tol;
    o.delta = delta;
    rh::MonodromyReport rep;
    try {
      rep = rh::compute_phi(rd, lambda, o);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    bool ok = true;
    for (const auto& [n, v] : rep.residuals) ok = ok && v < mono_tol;
    auto j = rep.to_json(with_matrices);
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
