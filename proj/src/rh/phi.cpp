#include "pbench/rh/phi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pbench/nc/groebner.hpp"
#include "pbench/preproj/presentations.hpp"

namespace pbench::rh {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
const Complex kI(0, 1);

Complex cis(const Rational& x) { return std::polar(1.0, kTwoPi * to_double(x)); }

}  // namespace

CMatrix to_complex(const QMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Complex(to_double(m(i, j)), 0);
  return out;
}

LegParameters zero_parameters(const RootData& rd) {
  const auto nd = rootdata::build_nodal_data(rd);
  LegParameters p;
  for (int k = 0; k < nd.num_legs; ++k) p.emplace_back(nd.leg_lengths[k], Rational(0));
  return p;
}

SphericalSystem system_from_B(const RootData& rd, LegParameters lambda) {
  if (lambda.empty()) lambda = zero_parameters(rd);
  preproj::PreprojSpec spec{rd, preproj::Mode::BsphericalDeformed};
  spec.leg_params = lambda;
  const auto pres = preproj::presentation_of(spec);
  nc::FilteredOptions fo;
  fo.build_gr_table = false;
  auto res = nc::build_filtered_basis(pres, fo);

  SphericalSystem out;
  out.lambda = lambda;
  out.rep = std::move(res.rep);
  const auto& rep = out.rep;
  const int m = static_cast<int>(lambda.size());
  std::vector<CMatrix> residues;
  for (int k = 0; k < m; ++k) {
    const int g = rep.pres->generator_index("U" + std::to_string(k + 1));
    out.u_generators.push_back(g);
    residues.push_back(to_complex(rep.left_matrix(rep.generator_times(g, rep.unit()))));
  }
  out.z_generator = rep.pres->generator_index("z");
  out.system = FuchsianSystem::with_default_poles(std::move(residues));
  out.system.Lz = to_complex(rep.left_matrix(rep.generator_times(out.z_generator, rep.unit())));
  for (int j = 0; j < rep.dimension; ++j) out.system.basis_left.push_back(to_complex(rep.left_matrix(rep.basis_vector(j))));
  const QVec one = rep.unit();
  out.system.unit = CVector(rep.dimension);
  for (int j = 0; j < rep.dimension; ++j) out.system.unit(j) = to_double(one[j]);
  out.system.validate();
  return out;
}

double MonodromyReport::residual(const std::string& name) const {
  for (const auto& [n, v] : residuals)
    if (n == name) return v;
  throw std::out_of_range("no residual named " + name);
}

nlohmann::json MonodromyReport::to_json(bool include_matrices) const {
  nlohmann::json lam = nlohmann::json::array();
  for (const auto& row : lambda) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(pbench::to_string(x));
    lam.push_back(r);
  }
  nlohmann::json res = nlohmann::json::object();
  for (const auto& [n, v] : residuals) res[n] = v;
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : stats) st.push_back({{"steps", s.steps}, {"rejected", s.rejected}, {"min_step", s.min_step}});
  nlohmann::json j{{"type", type},
                   {"lambda", lam},
                   {"dimension", dimension},
                   {"residuals", res},
                   {"integrator", st},
                   {"tol", tol},
                   {"integrator_tol", integrator_tol},
                   {"condition", fundamental_condition}};
  if (include_matrices) {
    nlohmann::json ys = nlohmann::json::array();
    for (const auto& y : Y) {
      nlohmann::json rows = nlohmann::json::array();
      for (long i = 0; i < y.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long c = 0; c < y.cols(); ++c) row.push_back({y(i, c).real(), y(i, c).imag()});
        rows.push_back(row);
      }
      ys.push_back(rows);
    }
    j["Y"] = ys;
  }
  return j;
}

MonodromyReport compute_phi(const RootData& rd, const LegParameters& lambda_in, const PhiOptions& opts) {
  const SphericalSystem ss = system_from_B(rd, lambda_in);
  const auto& sys = ss.system;
  const int m = static_cast<int>(ss.lambda.size());
  const long n = sys.dimension();
  const CMatrix I = CMatrix::Identity(n, n);

  MonodromyReport rep;
  rep.type = rd.type_label;
  rep.lambda = ss.lambda;
  rep.dimension = static_cast<int>(n);
  rep.tol = opts.tol;
  rep.integrator_tol = opts.integrator_tol > 0 ? opts.integrator_tol : std::max(opts.tol * 1e-6, 1e-13);

  TransportOptions to;
  to.tol = rep.integrator_tol;
  to.delta = opts.delta;
  for (int k = 0; k < m; ++k) {
    IntegrationStats st;
    rep.Y.push_back(monodromy(sys, k, to, &st));
    rep.stats.push_back(st);
    Eigen::JacobiSVD<CMatrix> svd(rep.Y.back());
    const auto sv = svd.singularValues();
    rep.fundamental_condition = std::max(rep.fundamental_condition, sv(0) / sv(sv.size() - 1));
  }

  // Hecke relations prod_j (Y_k - exp(2 pi i lambda_jk)) = 0
  for (int k = 0; k < m; ++k) {
    CMatrix p = I;
    for (const auto& l : ss.lambda[k]) p = p * (rep.Y[k] - cis(l) * I);
    rep.residuals.push_back({"hecke Y" + std::to_string(k + 1), operator_norm(p)});
  }
  CMatrix prod = I;
  for (int k = 0; k < m; ++k) prod = prod * rep.Y[k];
  rep.residuals.push_back({"product = exp(2 pi i z)", operator_norm(prod - matrix_exp(kTwoPi * kI * sys.Lz))});
  for (int k = 0; k < m; ++k) {
    const Complex want = std::exp(kTwoPi * kI * sys.residues[k].trace());
    const Complex got = rep.Y[k].determinant();
    rep.residuals.push_back({"det Y" + std::to_string(k + 1), std::abs(got - want) / std::max(1.0, std::abs(want))});
  }

  bool all_zero = true;
  for (const auto& row : ss.lambda)
    for (const auto& x : row) all_zero = all_zero && x == 0;
  if (all_zero) {
    const auto& alg = ss.rep;
    for (int k = 0; k < m; ++k) {
      const CMatrix u = matrix_log(rep.Y[k]) / (kTwoPi * kI);
      const CVector c = u * sys.unit;
      CMatrix recon = CMatrix::Zero(n, n);
      for (long j = 0; j < n; ++j) recon += c(j) * sys.basis_left[j];
      rep.residuals.push_back({"log Y" + std::to_string(k + 1) + " in image", operator_norm(u - recon)});
      const QVec uk = alg.generator_times(ss.u_generators[k], alg.unit());
      double worst = 0;
      for (long j = 0; j < n; ++j)
        if (alg.degree[j] <= 2) worst = std::max(worst, std::abs(c(j) - to_double(uk[j])));
      rep.residuals.push_back({"leading term of log Y" + std::to_string(k + 1), worst});
    }
  }
  return rep;
}

CheckResult verify_phi(const RootData& rd, const LegParameters& lambda, const PhiOptions& opts) {
  Stopwatch sw;
  CheckResult r;
  r.check_id = "monodromy";
  r.subject = rd.type_label;
  r.claim = "monodromy of the Fuchsian system of B(lambda) satisfies the Hecke relations";
  r.statement = "prod_j (Y_k - exp(2 pi i lambda_jk)) = 0, Y_1...Y_m = exp(2 pi i z), log Y_k / 2 pi i = U_k + higher terms";
  const MonodromyReport rep = compute_phi(rd, lambda, opts);
  r.inputs = rep.to_json(false);
  r.inputs.erase("residuals");
  for (const auto& [name, v] : rep.residuals) r.add(name, v, "< " + std::to_string(opts.tol), v < opts.tol);
  r.wall_time_ms = sw.elapsed_ms();
  return r;
}

}  // namespace pbench::rh
