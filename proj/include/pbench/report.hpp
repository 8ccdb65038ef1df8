#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pbench {

// One sub-claim inside a check.
struct CheckItem {
  std::string name;
  nlohmann::json computed;
  nlohmann::json expected;
  bool pass = false;
  std::string note;
};

// Outcome of one verification routine on one input.
struct CheckResult {
  std::string check_id;
  std::string subject;    // type label, group name, ...
  std::string claim;      // what is being verified, in words
  std::string statement;  // the formula or identity checked
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<CheckItem> items;
  uint64_t seed = 0;
  double wall_time_ms = 0;

  bool pass() const;
  CheckItem& add(std::string name, nlohmann::json computed, nlohmann::json expected, bool pass, std::string note = {});
  CheckItem& add_equal(std::string name, const nlohmann::json& computed, const nlohmann::json& expected);
  std::vector<std::string> failures() const;
  nlohmann::json to_json(bool include_timing = true) const;
  static CheckResult from_json(const nlohmann::json& j);
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Deterministic sub-seed for a named purpose.
uint64_t derive_seed(uint64_t seed, const std::string& tag);

}  // namespace pbench
