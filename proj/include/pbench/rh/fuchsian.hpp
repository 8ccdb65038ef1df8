#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace pbench::rh {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// dF/dzeta = sum_k U_k F / (zeta - zeta_k).
struct FuchsianSystem {
  std::vector<CMatrix> residues;
  std::vector<double> poles;  // strictly increasing
  double basepoint = 0;       // left of every pole
  CMatrix Lz;                 // sum of the residues unless set otherwise

  // When the system is the left regular representation of an algebra the
  // solution is F = L_f and only the vector f needs transporting.
  std::vector<CMatrix> basis_left;  // L_{b_j}
  CVector unit;                     // coordinates of 1

  int dimension() const { return residues.empty() ? 0 : static_cast<int>(residues[0].rows()); }
  bool has_algebra() const { return !basis_left.empty(); }
  // Throws std::invalid_argument on bad poles, basepoint or shapes.
  void validate() const;
  // Poles 1..m, basepoint 0, Lz = sum of residues.
  static FuchsianSystem with_default_poles(std::vector<CMatrix> residues);
};

struct PathSegment {
  enum class Kind { Line, Arc } kind = Kind::Line;
  Complex from, to;       // line
  Complex center;         // arc
  double radius = 0;
  double theta0 = 0, theta1 = 0;

  double length() const;
  Complex position(double s) const;    // s in [0, length]
  Complex derivative(double s) const;  // unit speed
};

using LoopPath = std::vector<PathSegment>;

double minimal_gap(const std::vector<double>& poles, double basepoint);
double default_clearance(const std::vector<double>& poles, double basepoint);
// Down to Im = -delta, right along it to below pole k, a full counterclockwise
// circle of radius delta, and back the same way. Throws
// std::invalid_argument unless 0 < delta < minimal_gap / 2.
LoopPath loop_path(int k, const std::vector<double>& poles, double basepoint, double delta);
// Smallest distance from the path to any pole other than `except`.
double path_clearance(const LoopPath& path, const std::vector<double>& poles, int except);

struct IntegrationStats {
  long steps = 0;
  long rejected = 0;
  double min_step = 0;
  double tolerance = 0;
};

struct TransportOptions {
  double tol = 1e-10;  // absolute and relative error per step
  double delta = 0;    // clearance; 0 picks the default
  long max_steps = 2000000;
};

// Solution along the path with F(basepoint) = initial. Throws
// std::runtime_error when the step size underflows or max_steps is hit.
CMatrix transport_matrix(const FuchsianSystem& sys, const LoopPath& path, const CMatrix& initial,
                         const TransportOptions& opts, IntegrationStats* stats = nullptr);
CVector transport_vector(const FuchsianSystem& sys, const LoopPath& path, const CVector& initial,
                         const TransportOptions& opts, IntegrationStats* stats = nullptr);

// Y_k, the transported fundamental solution normalized by F(basepoint) = I.
CMatrix monodromy(const FuchsianSystem& sys, int k, const TransportOptions& opts, IntegrationStats* stats = nullptr);
// Same, always integrating the full matrix equation.
CMatrix monodromy_matrix_mode(const FuchsianSystem& sys, int k, const TransportOptions& opts,
                              IntegrationStats* stats = nullptr);

double operator_norm(const CMatrix& m);
CMatrix matrix_exp(const CMatrix& m);
// Finite series when m - I is nilpotent, inverse scaling and squaring
// otherwise. Throws std::domain_error when m has an eigenvalue on the
// closed negative real axis.
CMatrix matrix_log(const CMatrix& m);

}  // namespace pbench::rh
