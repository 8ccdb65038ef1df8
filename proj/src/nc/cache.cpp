#include "pbench/nc/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pbench::nc {

uint64_t cache_key(const AlgebraPresentation& p, const GradedOptions& opts, int engine_version) {
  nlohmann::json j;
  j["presentation"] = p.to_json();
  j["max_degree"] = opts.max_degree;
  j["verify_tail"] = opts.verify_tail;
  j["engine_version"] = engine_version;
  return fnv1a64(j.dump());
}

std::string cache_key_hex(uint64_t key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(key));
  return buf;
}

namespace {

std::optional<GradedBasisTable> try_load(const AlgebraPresentation& p, const std::filesystem::path& file,
                                         uint64_t key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != cache_key_hex(key)) return std::nullopt;
    const std::string body = j.at("table").dump();
    if (j.at("checksum").get<std::string>() != cache_key_hex(fnv1a64(body))) return std::nullopt;
    return GradedBasisTable::from_json(p, j.at("table"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

GradedBasisTable build_graded_basis_cached(const AlgebraPresentation& p, const GradedOptions& opts,
                                           const std::optional<std::filesystem::path>& dir) {
  if (!dir) return build_graded_basis(p, opts);
  const uint64_t key = cache_key(p, opts);
  const auto file = *dir / ("table-" + cache_key_hex(key) + ".json");
  if (auto t = try_load(p, file, key)) return std::move(*t);

  GradedBasisTable tab = build_graded_basis(p, opts);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (!ec) {
    nlohmann::json table = tab.to_json();
    nlohmann::json j;
    j["key"] = cache_key_hex(key);
    j["checksum"] = cache_key_hex(fnv1a64(table.dump()));
    j["table"] = std::move(table);
    // write then rename so concurrent readers never see a partial file
    const auto tmp = file.string() + ".tmp" + std::to_string(reinterpret_cast<uintptr_t>(&tab));
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }
  return tab;
}

}  // namespace pbench::nc
