#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pbench/nc/regular_rep.hpp"
#include "pbench/report.hpp"
#include "pbench/rh/fuchsian.hpp"
#include "pbench/rootdata.hpp"

namespace pbench::rh {

using rootdata::RootData;
using nc::QVec;

using LegParameters = std::vector<std::vector<Rational>>;  // lambda_{jk}, one list per leg

// The spherical algebra B(lambda) together with the Fuchsian system whose
// residues are left multiplication by U_k.
struct SphericalSystem {
  FuchsianSystem system;
  nc::RegularRep rep;
  std::vector<int> u_generators;
  int z_generator = -1;
  LegParameters lambda;
};

// Empty lambda means all parameters zero.
SphericalSystem system_from_B(const RootData& rd, LegParameters lambda = {});
LegParameters zero_parameters(const RootData& rd);

struct PhiOptions {
  double tol = 1e-8;             // bound on every reported residual
  double integrator_tol = 0;     // per-step error; 0 means max(tol * 1e-6, 1e-13)
  double delta = 0;              // loop clearance; 0 picks the default
};

struct MonodromyReport {
  std::string type;
  LegParameters lambda;
  int dimension = 0;
  std::vector<CMatrix> Y;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<IntegrationStats> stats;
  double tol = 0;
  double integrator_tol = 0;
  double fundamental_condition = 0;  // largest condition number among the Y_k

  double residual(const std::string& name) const;
  nlohmann::json to_json(bool include_matrices = false) const;
};

MonodromyReport compute_phi(const RootData& rd, const LegParameters& lambda, const PhiOptions& opts = {});
// Hecke relations, product relation, determinants and (at lambda = 0) the
// leading term of log Y_k, each below opts.tol.
CheckResult verify_phi(const RootData& rd, const LegParameters& lambda, const PhiOptions& opts = {});

CMatrix to_complex(const QMatrix& m);

}  // namespace pbench::rh
