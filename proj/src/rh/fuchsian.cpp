#include "pbench/rh/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace pbench::rh {

namespace odeint = boost::numeric::odeint;

void FuchsianSystem::validate() const {
  if (residues.size() != poles.size()) throw std::invalid_argument("one pole per residue expected");
  if (residues.empty()) throw std::invalid_argument("no residues");
  const auto n = residues[0].rows();
  for (const auto& u : residues)
    if (u.rows() != n || u.cols() != n) throw std::invalid_argument("residues must be square of equal size");
  for (size_t k = 1; k < poles.size(); ++k)
    if (!(poles[k - 1] < poles[k])) throw std::invalid_argument("poles must be strictly increasing");
  if (!(basepoint < poles[0])) throw std::invalid_argument("basepoint must lie left of every pole");
  if (Lz.rows() != n || Lz.cols() != n) throw std::invalid_argument("Lz has the wrong shape");
  if (has_algebra()) {
    if (unit.size() != n || static_cast<long>(basis_left.size()) != n)
      throw std::invalid_argument("algebra data does not match the residues");
  }
}

FuchsianSystem FuchsianSystem::with_default_poles(std::vector<CMatrix> residues) {
  FuchsianSystem s;
  s.residues = std::move(residues);
  for (size_t k = 0; k < s.residues.size(); ++k) s.poles.push_back(static_cast<double>(k + 1));
  s.basepoint = 0;
  if (!s.residues.empty()) {
    s.Lz = CMatrix::Zero(s.residues[0].rows(), s.residues[0].cols());
    for (const auto& u : s.residues) s.Lz += u;
  }
  return s;
}

double PathSegment::length() const {
  if (kind == Kind::Line) return std::abs(to - from);
  return radius * std::abs(theta1 - theta0);
}

Complex PathSegment::position(double s) const {
  if (kind == Kind::Line) {
    const double len = length();
    return len == 0 ? from : from + (to - from) * (s / len);
  }
  const double dir = theta1 > theta0 ? 1.0 : -1.0;
  return center + std::polar(radius, theta0 + dir * s / radius);
}

Complex PathSegment::derivative(double s) const {
  if (kind == Kind::Line) {
    const double len = length();
    return len == 0 ? Complex(0) : (to - from) / len;
  }
  const double dir = theta1 > theta0 ? 1.0 : -1.0;
  return dir * Complex(0, 1) * std::polar(1.0, theta0 + dir * s / radius);
}

double minimal_gap(const std::vector<double>& poles, double basepoint) {
  double gap = poles.empty() ? 1.0 : poles[0] - basepoint;
  for (size_t k = 1; k < poles.size(); ++k) gap = std::min(gap, poles[k] - poles[k - 1]);
  return gap;
}

double default_clearance(const std::vector<double>& poles, double basepoint) {
  return minimal_gap(poles, basepoint) / 4;
}

LoopPath loop_path(int k, const std::vector<double>& poles, double basepoint, double delta) {
  if (k < 0 || k >= static_cast<int>(poles.size())) throw std::out_of_range("no pole with that index");
  const double gap = minimal_gap(poles, basepoint);
  if (!(delta > 0) || delta >= gap / 2)
    throw std::invalid_argument("clearance must be positive and below half the minimal gap");
  const Complex z0(basepoint, 0), low0(basepoint, -delta), lowk(poles[k], -delta);
  using K = PathSegment::Kind;
  const double pi = std::numbers::pi;
  LoopPath p;
  p.push_back({K::Line, z0, low0});
  p.push_back({K::Line, low0, lowk});
  p.push_back({K::Arc, {}, {}, Complex(poles[k], 0), delta, -pi / 2, 3 * pi / 2});
  p.push_back({K::Line, lowk, low0});
  p.push_back({K::Line, low0, z0});
  return p;
}

double path_clearance(const LoopPath& path, const std::vector<double>& poles, int except) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& seg : path) {
    const int samples = 400;
    for (int i = 0; i <= samples; ++i) {
      const Complex z = seg.position(seg.length() * i / samples);
      for (size_t j = 0; j < poles.size(); ++j)
        if (static_cast<int>(j) != except) best = std::min(best, std::abs(z - Complex(poles[j], 0)));
    }
  }
  return best;
}

namespace {

using State = std::vector<Complex>;
using Dopri = odeint::runge_kutta_dopri5<State, double, State, double>;

// Integrates dx/ds = A(zeta(s)) x zeta'(s) where x holds `cols` columns.
State integrate(const FuchsianSystem& sys, const LoopPath& path, State x, long cols, const TransportOptions& opts,
                double delta, IntegrationStats* stats) {
  const long n = sys.dimension();
  IntegrationStats st;
  st.tolerance = opts.tol;
  st.min_step = std::numeric_limits<double>::infinity();
  const double max_dt = delta / 2;
  for (const auto& seg : path) {
    const double len = seg.length();
    if (len == 0) continue;
    auto rhs = [&](const State& in, State& out, double s) {
      const Complex zeta = seg.position(s);
      const Complex dz = seg.derivative(s);
      Eigen::Map<const CMatrix> X(in.data(), n, cols);
      Eigen::Map<CMatrix> Y(out.data(), n, cols);
      Y.setZero();
      for (size_t k = 0; k < sys.residues.size(); ++k) Y.noalias() += (dz / (zeta - sys.poles[k])) * (sys.residues[k] * X);
    };
    auto stepper = odeint::make_controlled(opts.tol, opts.tol, max_dt, Dopri());
    double s = 0, ds = std::min(max_dt, len / 8);
    while (len - s > 1e-14 * len) {
      if (s + ds > len) ds = len - s;
      const double before = ds;
      if (stepper.try_step(rhs, x, s, ds) == odeint::success) {
        ++st.steps;
        st.min_step = std::min(st.min_step, before);
      } else {
        ++st.rejected;
      }
      if (ds < 1e-13 * len) throw std::runtime_error("step size underflow during transport");
      if (st.steps + st.rejected > opts.max_steps) throw std::runtime_error("transport did not converge in the step budget");
    }
  }
  if (stats) *stats = st;
  return x;
}

double resolve_delta(const FuchsianSystem& sys, const TransportOptions& opts) {
  return opts.delta > 0 ? opts.delta : default_clearance(sys.poles, sys.basepoint);
}

}  // namespace

CMatrix transport_matrix(const FuchsianSystem& sys, const LoopPath& path, const CMatrix& initial,
                         const TransportOptions& opts, IntegrationStats* stats) {
  const long n = sys.dimension();
  State x(initial.data(), initial.data() + n * initial.cols());
  x = integrate(sys, path, std::move(x), initial.cols(), opts, resolve_delta(sys, opts), stats);
  return Eigen::Map<CMatrix>(x.data(), n, initial.cols());
}

CVector transport_vector(const FuchsianSystem& sys, const LoopPath& path, const CVector& initial,
                         const TransportOptions& opts, IntegrationStats* stats) {
  const long n = sys.dimension();
  State x(initial.data(), initial.data() + n);
  x = integrate(sys, path, std::move(x), 1, opts, resolve_delta(sys, opts), stats);
  return Eigen::Map<CVector>(x.data(), n);
}

CMatrix monodromy_matrix_mode(const FuchsianSystem& sys, int k, const TransportOptions& opts, IntegrationStats* stats) {
  sys.validate();
  const LoopPath path = loop_path(k, sys.poles, sys.basepoint, resolve_delta(sys, opts));
  const long n = sys.dimension();
  return transport_matrix(sys, path, CMatrix::Identity(n, n), opts, stats);
}

CMatrix monodromy(const FuchsianSystem& sys, int k, const TransportOptions& opts, IntegrationStats* stats) {
  sys.validate();
  if (!sys.has_algebra()) return monodromy_matrix_mode(sys, k, opts, stats);
  const LoopPath path = loop_path(k, sys.poles, sys.basepoint, resolve_delta(sys, opts));
  const CVector y = transport_vector(sys, path, sys.unit, opts, stats);
  const long n = sys.dimension();
  CMatrix Y = CMatrix::Zero(n, n);
  for (long j = 0; j < n; ++j)
    if (y[j] != Complex(0)) Y += y[j] * sys.basis_left[j];
  return Y;
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

CMatrix matrix_exp(const CMatrix& m) { return m.exp(); }

CMatrix matrix_log(const CMatrix& m) {
  const long n = m.rows();
  const CMatrix N = m - CMatrix::Identity(n, n);
  // nilpotent fast path
  CMatrix power = N;
  const double scale = std::max(1.0, operator_norm(N));
  for (long k = 1; k <= n; ++k) {
    if (operator_norm(power) < 1e-12 * std::pow(scale, static_cast<double>(k))) {
      CMatrix out = CMatrix::Zero(n, n);
      CMatrix p = N;
      for (long j = 1; j < k; ++j) {
        out += ((j % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(j) * p;
        p = p * N;
      }
      return out;
    }
    power = power * N;
  }
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  for (long i = 0; i < n; ++i) {
    const Complex ev = es.eigenvalues()(i);
    if (ev.real() <= 0 && std::abs(ev.imag()) <= 1e-12 * std::max(1.0, std::abs(ev)))
      throw std::domain_error("eigenvalue on the negative real axis; no principal logarithm");
  }
  return m.log();
}

}  // namespace pbench::rh
