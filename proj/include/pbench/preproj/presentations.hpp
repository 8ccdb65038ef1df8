#pragma once

#include <string>
#include <vector>

#include "pbench/nc/presentation.hpp"
#include "pbench/rootdata.hpp"

namespace pbench::preproj {

using rootdata::NodalData;
using rootdata::RootData;
using Weight = std::vector<Rational>;  // fundamental-weight coordinates

enum class Mode {
  Pi0,                 // sum [a,a*] = 0
  Pi0mu,               // sum [a,a*] = sum mu_i z e_i, z central of degree 2
  PiLambdaMu,          // sum [a,a*] = sum (mu_i z + lambda_i) e_i, filtered
  PiTruncated,         // central x_1..x_r of degree 2, sum [a,a*] = sum x_i e_i
  Bspherical,          // abstract corner algebra on U_1..U_m and z
  BsphericalDeformed,  // B(lambda): prod_i (U_k - lambda_ik) = 0, sum U_k = z
};

std::string mode_name(Mode m);

struct PreprojSpec {
  RootData rd;
  Mode mode = Mode::Pi0;
  Weight mu;      // empty means zero
  Weight lambda;  // empty means zero
  // B(lambda): leg_params[k] has d_k entries
  std::vector<std::vector<Rational>> leg_params;
  // Bspherical / BsphericalDeformed: also impose z = 0
  bool kill_z = false;
};

// Validates the genericity hypotheses of the chosen mode and builds the
// presentation. Throws std::invalid_argument when a hypothesis fails.
nc::AlgebraPresentation presentation_of(const PreprojSpec& spec);

// Names used by presentation_of.
std::string arrow_name(int edge);           // "a1", "a2", ...
std::string star_name(int edge);            // "a1*", ...
std::string z_loop_name(int vertex);        // "z1", ... (one loop per vertex)
std::string x_loop_name(int j, int vertex); // "x1@2": x_1 at vertex 2

// Pairings of positive roots with weights.
bool is_regular(const RootData& rd, const Weight& mu);
// (alpha, mu) != 0 for every positive root with a positive coefficient at p
bool spherical_condition(const RootData& rd, int node, const Weight& mu);
// c_alpha = (lambda, alpha) / (mu, alpha) for each positive root
std::vector<Rational> block_ratios(const RootData& rd, const Weight& lambda, const Weight& mu);
bool ratios_distinct(const std::vector<Rational>& c);

// The element sum_v z_v as a list of terms, one per vertex (for Pi0mu).
std::vector<nc::Path> z_loops(const nc::AlgebraPresentation& p, int num_vertices);

// Corner generator U_k as a signed path p -> i_1(k) -> p in Pi0mu. The signs
// make sum_k U_k = -x_p under the vertex relation used here.
std::vector<nc::Term> corner_element(const nc::AlgebraPresentation& p, const RootData& rd, int node,
                                     const std::vector<int>& leg);

}  // namespace pbench::preproj
