#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "pbench/nc/graded.hpp"

namespace pbench::nc {

// Bumped whenever the table layout or the engine's basis choice changes, so
// that stale cache entries are never read back.
inline constexpr int kEngineVersion = 1;

// Stable content hash of a presentation and the engine options.
uint64_t cache_key(const AlgebraPresentation& p, const GradedOptions& opts, int engine_version = kEngineVersion);
std::string cache_key_hex(uint64_t key);

// Builds the table, reading and writing `dir` when given. An entry whose
// stored key or checksum does not match is discarded and rebuilt.
GradedBasisTable build_graded_basis_cached(const AlgebraPresentation& p, const GradedOptions& opts,
                                           const std::optional<std::filesystem::path>& dir);

}  // namespace pbench::nc
