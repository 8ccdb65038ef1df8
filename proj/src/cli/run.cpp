#include "pbench/cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "pbench/preproj/hilbert.hpp"
#include "pbench/preproj/verify.hpp"
#include "pbench/qfusion/verify.hpp"
#include "pbench/refl/verify.hpp"
#include "pbench/rh/phi.hpp"
#include "pbench/rootdata.hpp"

namespace pbench::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw ConfigError("unknown format '" + s + "' (json, csv or markdown)");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"checks", checks}, {"types", types},     {"seed", seed},
                   {"max_degree", max_degree}, {"slow", slow}};
  j["tol"] = tol ? nlohmann::json(*tol) : nlohmann::json(nullptr);
  return j;
}

namespace {

rootdata::RootData root_data(const std::string& label) {
  try {
    return rootdata::build_root_data(label);
  } catch (const std::exception& e) {
    throw ConfigError("bad type '" + label + "': " + e.what());
  }
}

preproj::VerifyOptions verify_options(const RunConfig& c) {
  preproj::VerifyOptions o;
  o.seed = c.seed;
  o.cache_dir = c.cache_dir;
  return o;
}

double monodromy_tol(const std::string& type, const RunConfig& c) {
  if (c.tol) return *c.tol;
  if (type == "A3") return 1e-8;
  if (type == "E6") return 1e-5;
  return 1e-6;
}

using rootdata::RootData;

CheckSpec type_check(std::string id, std::string desc, std::vector<std::string> subjects,
                     std::vector<std::string> slow,
                     std::function<CheckResult(const RootData&, const RunConfig&)> fn) {
  CheckSpec s;
  s.id = std::move(id);
  s.description = std::move(desc);
  s.subject_kind = SubjectKind::RootType;
  s.subjects = std::move(subjects);
  s.slow_subjects = std::move(slow);
  s.run = [fn](const std::string& subject, const RunConfig& c) { return fn(root_data(subject), c); };
  return s;
}

std::vector<CheckSpec> build_registry() {
  const std::vector<std::string> five{"A5", "D5", "E6", "E7", "E8"};
  std::vector<CheckSpec> r;
  r.push_back(type_check("pi0", "graded dimensions, Hilbert matrix and Frobenius pairing of the preprojective algebra",
                         {"A2", "A3", "A4", "A5", "D4", "D5"}, {"E6"},
                         [](const RootData& rd, const RunConfig& c) { return preproj::verify_pi0(rd, verify_options(c)); }));
  r.push_back(type_check("pi0mu", "central extension by z for a seeded regular weight", {"A2", "A3", "D4"}, {},
                         [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_pi0mu(rd, std::nullopt, verify_options(c));
                         }));
  r.push_back(type_check("flatness", "filtered deformations keep the dimension and associated graded",
                         {"A2", "A3", "D4"}, {}, [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_flatness(rd, std::nullopt, 3, verify_options(c));
                         }));
  r.push_back(type_check("block", "eigenvalues and multiplicities of z for mu = rho", {"A2", "A3"}, {},
                         [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_block_decomposition(rd, std::nullopt, verify_options(c));
                         }));
  r.push_back(type_check("pi-truncated", "graded dimensions with central loops against the series",
                         {"A2", "A3"}, {}, [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_pi_truncated(rd, c.max_degree, verify_options(c));
                         }));
  r.push_back(type_check("weyl-denominator", "product over positive roots vanishes at every vertex", {"A2"}, {"A3"},
                         [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_weyl_denominator(rd, verify_options(c));
                         }));
  r.push_back(type_check("ideal-powers", "quotients of powers of the ideal generated by z", {"A2", "A3", "D4"}, {},
                         [](const RootData& rd, const RunConfig& c) {
                           return preproj::verify_ideal_powers(rd, verify_options(c));
                         }));
  r.push_back(type_check("spherical", "spherical corner algebras B(0), B(lambda), B_0", {"A3", "D4"}, {"E6"},
                         [](const RootData& rd, const RunConfig& c) { return preproj::verify_B(rd, 3, verify_options(c)); }));
  r.push_back(type_check("corner", "node corner against the abstract spherical presentation", {"A3", "D4"}, {},
                         [](const RootData& rd, const RunConfig& c) {
                           return preproj::cross_check_corner(rd, std::nullopt, verify_options(c));
                         }));
  r.push_back(type_check("hilbert-identity", "closed forms of the Hilbert series as polynomial identities", five, {},
                         [](const RootData& rd, const RunConfig&) { return preproj::verify_hilbert_identities(rd); }));
  r.push_back(type_check("fusion", "fusion functor and Tchebysheff identities", five, {},
                         [](const RootData& rd, const RunConfig&) { return qfusion::verify_prop_func_and_pir(rd); }));
  r.push_back(type_check("a-selfduality", "Grothendieck-level self-duality of the algebra A", five, {},
                         [](const RootData& rd, const RunConfig&) {
                           return qfusion::verify_A_selfduality(rd.coxeter_number);
                         }));
  r.push_back(type_check("monodromy", "Riemann-Hilbert monodromy satisfies the Hecke relations", {"A3", "D4"}, {"E6"},
                         [](const RootData& rd, const RunConfig& c) {
                           rh::PhiOptions o;
                           o.tol = monodromy_tol(rd.type_label, c);
                           return rh::verify_phi(rd, {}, o);
                         }));
  {
    CheckSpec s;
    s.id = "heisenberg";
    s.description = "quantum Heisenberg normal forms, commutation formulas and characters";
    s.subject_kind = SubjectKind::None;
    s.subjects = {"quantum-heisenberg"};
    s.run = [](const std::string&, const RunConfig& c) { return qfusion::verify_heisenberg(6, 8, 6, 12, c.seed); };
    r.push_back(s);
  }
  {
    CheckSpec s;
    s.id = "verlinde";
    s.description = "Verlinde fusion rules against Clebsch-Gordan truncation";
    s.subject_kind = SubjectKind::None;
    s.subjects = {"sl2"};
    s.run = [](const std::string&, const RunConfig&) { return qfusion::verify_verlinde(10); };
    r.push_back(s);
  }
  {
    CheckSpec s;
    s.id = "groups";
    s.description = "group orders by coset enumeration";
    s.subject_kind = SubjectKind::Group;
    s.subjects = refl::all_group_names();
    s.run = [](const std::string& g, const RunConfig&) { return refl::verify_group(refl::catalog_entry(g)); };
    r.push_back(s);
  }
  {
    CheckSpec s;
    s.id = "hstar";
    s.description = "dimension of the unipotent Hecke quotient with Z = 1";
    s.subject_kind = SubjectKind::Family;
    s.subjects = {"tetrahedral", "octahedral", "icosahedral"};
    s.run = [](const std::string& f, const RunConfig&) { return refl::verify_hstar(refl::parse_family(f)); };
    r.push_back(s);
  }
  std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> reg = build_registry();
  return reg;
}

const CheckSpec& find_check(const std::string& id) {
  for (const auto& s : check_registry())
    if (s.id == id) return s;
  throw ConfigError("unknown check '" + id + "'");
}

std::vector<std::pair<std::string, std::string>> plan(const RunConfig& config) {
  std::vector<std::string> ids = config.checks;
  if (ids.empty())
    for (const auto& s : check_registry()) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  const bool all_types = config.types.empty() ||
                         std::find(config.types.begin(), config.types.end(), "all") != config.types.end();
  std::vector<std::string> explicit_types;
  if (!all_types)
    for (const auto& t : config.types) {
      try {
        const auto [fam, n] = rootdata::parse_type_label(t);
        explicit_types.push_back(rootdata::canonical_label(fam, n));
      } catch (const std::exception& e) {
        throw ConfigError("bad type '" + t + "': " + e.what());
      }
    }

  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& id : ids) {
    const CheckSpec& spec = find_check(id);
    std::vector<std::string> subjects;
    if (spec.subject_kind == SubjectKind::RootType && !all_types) {
      subjects = explicit_types;
    } else {
      subjects = spec.subjects;
      if (config.slow) subjects.insert(subjects.end(), spec.slow_subjects.begin(), spec.slow_subjects.end());
    }
    for (const auto& s : subjects) out.emplace_back(id, s);
  }
  return out;
}

Report run(const RunConfig& config) {
  const auto tasks = plan(config);
  Report rep;
  rep.config = config;
  rep.records.resize(tasks.size());

  auto execute = [&](size_t i) {
    const auto& [id, subject] = tasks[i];
    try {
      rep.records[i] = find_check(id).run(subject, config);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(id + " does not apply to " + subject + ": " + e.what());
    } catch (const std::exception& e) {
      CheckResult r;
      r.check_id = id;
      r.subject = subject;
      r.claim = find_check(id).description;
      r.add("completed", e.what(), "no error", false, "the routine threw");
      rep.records[i] = r;
    }
    rep.records[i].seed = config.seed;
  };

  const int jobs = config.jobs > 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) execute(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int w = 0; w < std::min<int>(jobs, static_cast<int>(tasks.size())); ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next++; i < tasks.size(); i = next++) execute(i);
      }));
    std::exception_ptr first;
    for (auto& w : workers) {
      try {
        w.get();
      } catch (...) {
        if (!first) first = std::current_exception();
      }
    }
    if (first) std::rethrow_exception(first);
  }
  return rep;
}

long Report::passed() const {
  return std::count_if(records.begin(), records.end(), [](const CheckResult& r) { return r.pass(); });
}

long Report::failed() const { return static_cast<long>(records.size()) - passed(); }

nlohmann::json Report::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back(r.to_json(config.timing));
  return {{"schema", kReportSchema},
          {"config", config.to_json()},
          {"records", recs},
          {"summary", {{"total", records.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

Report Report::from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kReportSchema) throw ConfigError("not a report with schema " + std::string(kReportSchema));
  Report r;
  const auto& c = j.at("config");
  r.config.checks = c.at("checks").get<std::vector<std::string>>();
  r.config.types = c.at("types").get<std::vector<std::string>>();
  r.config.seed = c.at("seed").get<uint64_t>();
  r.config.max_degree = c.at("max_degree").get<int>();
  r.config.slow = c.at("slow").get<bool>();
  if (!c.at("tol").is_null()) r.config.tol = c.at("tol").get<double>();
  for (const auto& rec : j.at("records")) r.records.push_back(CheckResult::from_json(rec));
  r.config.timing = !r.records.empty() && r.records[0].wall_time_ms > 0;
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string plain(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : ch == '\n' ? std::string(" ") : std::string(1, ch);
  if (out.size() > 80) out = out.substr(0, 77) + "...";
  return out;
}

}  // namespace

std::string Report::render(Format f) const {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << to_json().dump(2) << "\n";
      break;
    case Format::Csv:
      os << "check_id,subject,item,computed,expected,pass,note\n";
      for (const auto& r : records)
        for (const auto& it : r.items)
          os << csv_field(r.check_id) << ',' << csv_field(r.subject) << ',' << csv_field(it.name) << ','
             << csv_field(plain(it.computed)) << ',' << csv_field(plain(it.expected)) << ','
             << (it.pass ? "true" : "false") << ',' << csv_field(it.note) << "\n";
      break;
    case Format::Markdown:
      os << "| check | subject | result | items | time (ms) |\n|---|---|---|---|---|\n";
      for (const auto& r : records) {
        long ok = std::count_if(r.items.begin(), r.items.end(), [](const CheckItem& i) { return i.pass; });
        os << "| " << r.check_id << " | " << r.subject << " | " << (r.pass() ? "PASS" : "FAIL") << " | " << ok << "/"
           << r.items.size() << " | ";
        if (config.timing) os << static_cast<long>(r.wall_time_ms);
        os << " |\n";
      }
      os << "\n" << passed() << " passed, " << failed() << " failed\n";
      for (const auto& r : records)
        for (const auto& it : r.items)
          if (!it.pass)
            os << "\n- " << r.check_id << " / " << r.subject << " / " << it.name << ": computed "
               << md_cell(plain(it.computed)) << ", expected " << md_cell(plain(it.expected));
      if (failed() > 0) os << "\n";
      break;
  }
  return os.str();
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv("PBENCH_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::vector<std::vector<std::string>> parse_lambda_text(const std::string& text) {
  if (text == "zero" || text.empty()) return {};
  std::vector<std::vector<std::string>> legs;
  std::stringstream ss(text);
  std::string leg;
  while (std::getline(ss, leg, ';')) {
    std::vector<std::string> row;
    std::stringstream ls(leg);
    std::string x;
    while (std::getline(ls, x, ',')) {
      x.erase(std::remove_if(x.begin(), x.end(), ::isspace), x.end());
      if (x.empty()) throw ConfigError("empty parameter in '" + text + "'");
      row.push_back(x);
    }
    legs.push_back(row);
  }
  return legs;
}

}  // namespace pbench::cli
