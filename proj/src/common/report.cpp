#include "pbench/report.hpp"

namespace pbench {

bool CheckResult::pass() const {
  if (items.empty()) return false;
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

CheckItem& CheckResult::add(std::string name, nlohmann::json computed, nlohmann::json expected, bool pass,
                            std::string note) {
  items.push_back({std::move(name), std::move(computed), std::move(expected), pass, std::move(note)});
  return items.back();
}

CheckItem& CheckResult::add_equal(std::string name, const nlohmann::json& computed, const nlohmann::json& expected) {
  return add(std::move(name), computed, expected, computed == expected);
}

std::vector<std::string> CheckResult::failures() const {
  std::vector<std::string> f;
  for (const auto& it : items)
    if (!it.pass) f.push_back(it.name);
  return f;
}

nlohmann::json CheckResult::to_json(bool include_timing) const {
  nlohmann::json j;
  j["check"] = check_id;
  j["subject"] = subject;
  j["claim"] = claim;
  j["statement"] = statement;
  j["inputs"] = inputs;
  j["seed"] = seed;
  j["pass"] = pass();
  nlohmann::json its = nlohmann::json::array();
  for (const auto& it : items) {
    nlohmann::json e{{"name", it.name}, {"computed", it.computed}, {"expected", it.expected}, {"pass", it.pass}};
    if (!it.note.empty()) e["note"] = it.note;
    its.push_back(e);
  }
  j["items"] = its;
  if (include_timing) j["wall_time_ms"] = wall_time_ms;
  return j;
}

CheckResult CheckResult::from_json(const nlohmann::json& j) {
  CheckResult r;
  r.check_id = j.at("check").get<std::string>();
  r.subject = j.value("subject", "");
  r.claim = j.value("claim", "");
  r.statement = j.value("statement", "");
  r.inputs = j.value("inputs", nlohmann::json::object());
  r.seed = j.value("seed", uint64_t{0});
  r.wall_time_ms = j.value("wall_time_ms", 0.0);
  for (const auto& e : j.at("items"))
    r.items.push_back({e.at("name").get<std::string>(), e.at("computed"), e.at("expected"), e.at("pass").get<bool>(),
                       e.value("note", "")});
  return r;
}

uint64_t derive_seed(uint64_t seed, const std::string& tag) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pbench
