#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pbench/rh/fuchsian.hpp"
#include "pbench/rh/phi.hpp"

using namespace pbench;
using namespace pbench::rh;

namespace {

const double kTwoPi = 2 * std::numbers::pi;
const Complex kI(0, 1);

// Winding number of a closed path around a point, by accumulating argument.
double winding(const LoopPath& path, Complex p) {
  double total = 0;
  for (const auto& seg : path) {
    const int samples = 2000;
    for (int i = 0; i < samples; ++i) {
      const Complex a = seg.position(seg.length() * i / samples) - p;
      const Complex b = seg.position(seg.length() * (i + 1) / samples) - p;
      total += std::arg(b / a);
    }
  }
  return total / kTwoPi;
}

// Taylor series, adequate for the small or nilpotent matrices used here.
CMatrix taylor_exp(const CMatrix& a) {
  CMatrix out = CMatrix::Identity(a.rows(), a.cols());
  CMatrix term = out;
  for (int k = 1; k < 80; ++k) {
    term = term * a / static_cast<double>(k);
    out += term;
  }
  return out;
}

CMatrix random_matrix(int n, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

}  // namespace

TEST_CASE("loop paths") {
  const std::vector<double> one{1.0};
  const auto p1 = loop_path(0, one, 0.0, 0.25);
  int arcs = 0;
  for (const auto& s : p1) arcs += s.kind == PathSegment::Kind::Arc;
  CHECK(arcs == 1);
  CHECK(std::abs(p1.front().position(0) - Complex(0, 0)) < 1e-15);
  CHECK(std::abs(p1.back().position(p1.back().length()) - Complex(0, 0)) < 1e-15);
  CHECK(std::abs(winding(p1, {1, 0}) - 1) < 1e-9);

  const std::vector<double> three{1, 2, 3};
  const double delta = default_clearance(three, 0);
  CHECK(delta == doctest::Approx(0.25));
  const auto p2 = loop_path(1, three, 0.0, delta);
  CHECK(std::abs(winding(p2, {2, 0}) - 1) < 1e-9);
  CHECK(std::abs(winding(p2, {1, 0})) < 1e-9);
  CHECK(std::abs(winding(p2, {3, 0})) < 1e-9);
  CHECK(path_clearance(p2, three, 1) >= delta / 2);
  // the path passes below pole 1: the lowest point under it has negative imaginary part
  bool below = false;
  for (const auto& s : p2)
    for (int i = 0; i <= 100; ++i) {
      const Complex z = s.position(s.length() * i / 100);
      if (std::abs(z.real() - 1) < 1e-3) below = below || z.imag() < 0;
    }
  CHECK(below);
  CHECK_THROWS_AS(loop_path(0, three, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(loop_path(0, three, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(loop_path(3, three, 0.0, 0.1), std::out_of_range);
}

TEST_CASE("system validation") {
  auto s = FuchsianSystem::with_default_poles({CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)});
  CHECK_NOTHROW(s.validate());
  s.poles = {2, 1};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.poles = {1, 2};
  s.basepoint = 1.5;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("trivial and scalar monodromy") {
  const auto zero = FuchsianSystem::with_default_poles({CMatrix::Zero(3, 3), CMatrix::Zero(3, 3)});
  for (int k = 0; k < 2; ++k) CHECK((monodromy(zero, k, {}) - CMatrix::Identity(3, 3)).norm() < 1e-14);

  for (Complex u : {Complex(0.3, 0), Complex(-0.7, 0.2), Complex(1.5, -0.1)}) {
    CMatrix U(1, 1);
    U(0, 0) = u;
    const auto sys = FuchsianSystem::with_default_poles({U});
    const CMatrix Y = monodromy(sys, 0, {});
    CHECK(std::abs(Y(0, 0) - std::exp(kTwoPi * kI * u)) < 1e-8);
  }
}

TEST_CASE("commuting residues match exp(2 pi i U)") {
  std::mt19937_64 rng(7);
  const int n = 4;
  const CMatrix P = random_matrix(n, rng, 1.0) + 3.0 * CMatrix::Identity(n, n);
  const CMatrix Pinv = P.inverse();
  std::vector<CMatrix> res;
  std::uniform_real_distribution<double> d(-0.4, 0.4);
  for (int k = 0; k < 3; ++k) {
    CMatrix D = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) D(i, i) = Complex(d(rng), d(rng));
    res.push_back(P * D * Pinv);
  }
  const auto sys = FuchsianSystem::with_default_poles(res);
  TransportOptions o;
  o.tol = 1e-12;
  for (int k = 0; k < 3; ++k) {
    const CMatrix want = taylor_exp(kTwoPi * kI * res[k]);
    CHECK(operator_norm(monodromy(sys, k, o) - want) < 1e-8);
  }
}

TEST_CASE("determinant identity on a non-commuting system") {
  std::mt19937_64 rng(11);
  std::vector<CMatrix> res;
  for (int k = 0; k < 3; ++k) res.push_back(random_matrix(3, rng, 0.3));
  const auto sys = FuchsianSystem::with_default_poles(res);
  TransportOptions o;
  o.tol = 1e-12;
  CMatrix prod = CMatrix::Identity(3, 3);
  for (int k = 0; k < 3; ++k) {
    const CMatrix Y = monodromy(sys, k, o);
    CHECK(std::abs(Y.determinant() - std::exp(kTwoPi * kI * res[k].trace())) < 1e-8);
    prod = prod * Y;
  }
  // Y_1 Y_2 Y_3 is the loop around every pole, whose determinant is fixed too
  CHECK(std::abs(prod.determinant() - std::exp(kTwoPi * kI * sys.Lz.trace())) < 1e-8);
}

TEST_CASE("matrix logarithm") {
  std::mt19937_64 rng(3);
  const CMatrix a = random_matrix(4, rng, 0.2);
  CHECK(operator_norm(matrix_log(taylor_exp(a)) - a) < 1e-10);
  CMatrix nil = CMatrix::Zero(3, 3);
  nil(0, 1) = 2;
  nil(1, 2) = 3;
  const CMatrix y = taylor_exp(nil);
  CHECK(operator_norm(matrix_log(y) - nil) < 1e-12);
  CMatrix neg = CMatrix::Identity(2, 2);
  neg(1, 1) = -2;
  CHECK_THROWS_AS(matrix_log(neg), std::domain_error);
}

TEST_CASE("A3 at lambda = 0 against the commutative closed form") {
  const auto rd = rootdata::build_root_data("A3");
  const auto ss = system_from_B(rd);
  REQUIRE(ss.system.dimension() == 4);
  // residues commute, so F = prod (zeta - zeta_j)^{U_j} and Y_k = exp(2 pi i U_k)
  const auto& U = ss.system.residues;
  CHECK((U[0] * U[1] - U[1] * U[0]).norm() < 1e-14);
  TransportOptions o;
  o.tol = 1e-13;
  for (int k = 0; k < 2; ++k)
    CHECK(operator_norm(monodromy(ss.system, k, o) - taylor_exp(kTwoPi * kI * U[k])) < 1e-8);

  PhiOptions po;
  po.tol = 1e-8;
  const auto rep = compute_phi(rd, {}, po);
  CHECK(rep.residual("hecke Y1") < 1e-8);
  CHECK(rep.residual("hecke Y2") < 1e-8);
  CHECK(rep.residual("product = exp(2 pi i z)") < 1e-8);
  CHECK(verify_phi(rd, {}, po).pass());
}

TEST_CASE("D4 at lambda = 0") {
  const auto rd = rootdata::build_root_data("D4");
  PhiOptions po;
  po.tol = 1e-6;
  const auto r = verify_phi(rd, {}, po);
  for (const auto& f : r.failures()) MESSAGE(f);
  CHECK(r.pass());
  CHECK(r.inputs["dimension"] == 12);

  // vector transport against the full matrix equation
  const auto ss = system_from_B(rd);
  TransportOptions o;
  o.tol = 1e-11;
  for (int k = 0; k < 3; ++k) {
    const CMatrix a = monodromy(ss.system, k, o);
    const CMatrix b = monodromy_matrix_mode(ss.system, k, o);
    CHECK(operator_norm(a - b) / operator_norm(a) < 1e-8);
  }
}

TEST_CASE("D4 with small lambda") {
  const auto rd = rootdata::build_root_data("D4");
  LegParameters lam{{make_rational(1, 50), make_rational(-1, 40)},
                    {make_rational(1, 30), Rational(0)},
                    {make_rational(-1, 25), make_rational(1, 60)}};
  PhiOptions po;
  po.tol = 1e-6;
  const auto r = verify_phi(rd, lam, po);
  for (const auto& f : r.failures()) MESSAGE(f);
  CHECK(r.pass());
}

TEST_CASE("residuals shrink with the integrator tolerance") {
  const auto rd = rootdata::build_root_data("D4");
  std::vector<MonodromyReport> reps;
  for (double it : {1e-7, 5e-8, 2.5e-8, 1.25e-8}) {
    PhiOptions po;
    po.tol = 1e-6;
    po.integrator_tol = it;
    reps.push_back(compute_phi(rd, {}, po));
  }
  for (size_t i = 0; i < reps[0].residuals.size(); ++i) {
    const std::string name = reps[0].residuals[i].first;
    CAPTURE(name);
    double ynorm = 0;
    for (const auto& y : reps[0].Y) ynorm = std::max(ynorm, operator_norm(y));
    const double floor = 10 * std::numeric_limits<double>::epsilon() * ynorm;
    for (size_t h = 1; h < reps.size(); ++h) {
      const double prev = reps[h - 1].residuals[i].second, cur = reps[h].residuals[i].second;
      CHECK((cur <= prev || cur < floor));
    }
  }
}

TEST_CASE("monodromy does not depend on the clearance") {
  const auto rd = rootdata::build_root_data("D4");
  const auto ss = system_from_B(rd);
  TransportOptions o;
  o.tol = 1e-10;
  const double d0 = default_clearance(ss.system.poles, ss.system.basepoint);
  for (int k = 0; k < 3; ++k) {
    o.delta = d0;
    const CMatrix y = monodromy(ss.system, k, o);
    for (double f : {0.75, 1.25}) {
      o.delta = d0 * f;
      CHECK(operator_norm(monodromy(ss.system, k, o) - y) < 10 * 1e-6);
    }
  }
}

TEST_CASE("E6 at lambda = 0") {
  const auto rd = rootdata::build_root_data("E6");
  PhiOptions po;
  po.tol = 1e-5;
  const auto r = verify_phi(rd, {}, po);
  for (const auto& f : r.failures()) MESSAGE(f);
  CHECK(r.pass());
  CHECK(r.inputs["dimension"] == 72);
}
