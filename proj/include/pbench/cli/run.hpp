#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbench/report.hpp"

namespace pbench::cli {

inline constexpr const char* kReportSchema = "pbench.report/1";

// Bad user input; the front end maps it to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& s);

struct RunConfig {
  std::vector<std::string> checks;  // empty means every check
  std::vector<std::string> types;   // empty or "all" means each check's own list
  uint64_t seed = 1;
  int max_degree = 6;               // truncation bound for pi-truncated
  std::optional<double> tol;        // monodromy tolerance; default depends on the type
  bool slow = false;
  std::optional<std::filesystem::path> cache_dir;
  bool timing = true;
  int jobs = 0;                     // 0 means hardware concurrency

  nlohmann::json to_json() const;
};

enum class SubjectKind { RootType, Group, Family, None };

struct CheckSpec {
  std::string id;
  std::string description;
  SubjectKind subject_kind = SubjectKind::RootType;
  std::vector<std::string> subjects;       // default run
  std::vector<std::string> slow_subjects;  // added by --slow
  std::function<CheckResult(const std::string& subject, const RunConfig&)> run;
};

// Sorted by id; every id maps to one verification routine.
const std::vector<CheckSpec>& check_registry();
const CheckSpec& find_check(const std::string& id);  // throws ConfigError

struct Report {
  RunConfig config;
  std::vector<CheckResult> records;  // sorted by check id, then run order

  long passed() const;
  long failed() const;
  bool all_pass() const { return failed() == 0; }
  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string render(Format f) const;
};

// The (check, subject) pairs a config selects, in deterministic order.
std::vector<std::pair<std::string, std::string>> plan(const RunConfig& config);
// Runs the plan; a check that throws is recorded as a failing item.
Report run(const RunConfig& config);

// Cache directory from PBENCH_CACHE_DIR when not configured explicitly.
std::optional<std::filesystem::path> cache_dir_from_env();

// "zero" or legs separated by ';' and parameters by ','.
std::vector<std::vector<std::string>> parse_lambda_text(const std::string& text);

}  // namespace pbench::cli
