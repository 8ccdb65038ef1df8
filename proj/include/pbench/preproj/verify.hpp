#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbench/preproj/hilbert.hpp"
#include "pbench/preproj/presentations.hpp"
#include "pbench/report.hpp"

namespace pbench::preproj {

struct VerifyOptions {
  uint64_t seed = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool use_oracle = true;  // cross-check graded dimensions by word spans
};

// Random rational in [-1000, 1000] with denominator in [1, 1000].
Rational random_rational(uint64_t& state);
// Draws weights until `accept` holds; throws std::runtime_error after
// `max_tries` rejections.
Weight random_weight(int rank, uint64_t seed, const std::function<bool(const Weight&)>& accept, int max_tries = 100);
Weight rho_weight(const RootData& rd);
std::vector<std::string> weight_to_strings(const Weight& w);

// Graded dimension, Hilbert matrix, oracle cross-check and Frobenius
// pairing of the algebra with sum [a,a*] = 0.
CheckResult verify_pi0(const RootData& rd, const VerifyOptions& opts = {});
// The central extension by z; mu defaults to a seeded random regular weight.
CheckResult verify_pi0mu(const RootData& rd, std::optional<Weight> mu, const VerifyOptions& opts = {});
// Filtered deformations have the same size and associated graded.
CheckResult verify_flatness(const RootData& rd, std::optional<Weight> mu, int samples, const VerifyOptions& opts = {});
// Eigenvalues of z for mu = rho; lambda defaults to a seeded generic weight.
// Throws std::invalid_argument when the given lambda makes two ratios collide.
CheckResult verify_block_decomposition(const RootData& rd, std::optional<Weight> lambda, const VerifyOptions& opts = {});
// Graded dimensions with central x_i against the series expansion.
CheckResult verify_pi_truncated(const RootData& rd, int max_degree, const VerifyOptions& opts = {});
// prod over positive roots of (alpha, x) vanishes at every vertex.
CheckResult verify_weyl_denominator(const RootData& rd, const VerifyOptions& opts = {});
// Quotients N^k / N^{k+1} of the ideal generated by z in the mu = rho case.
CheckResult verify_ideal_powers(const RootData& rd, const VerifyOptions& opts = {});
// Spherical algebras B(0), B(lambda), B_0 and B_0^mu.
CheckResult verify_B(const RootData& rd, int lambda_samples, const VerifyOptions& opts = {});
// The node corner of the central extension against the abstract presentation.
CheckResult cross_check_corner(const RootData& rd, std::optional<Weight> mu, const VerifyOptions& opts = {});

}  // namespace pbench::preproj
