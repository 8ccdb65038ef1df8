#pragma once

#include <vector>

#include "pbench/exact/dense.hpp"
#include "pbench/exact/laurent.hpp"

namespace pbench {

// Square matrix of Laurent polynomials in t.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}

  static PolyMatrix identity(int n);
  static PolyMatrix constant(const QMatrix& m);
  // sum_k coeff[k] t^k with matrix coefficients
  static PolyMatrix from_coefficients(const std::vector<QMatrix>& coeffs, int min_exp = 0);

  int size() const { return n_; }
  LaurentPoly& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }
  const LaurentPoly& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const LaurentPoly& p) const;
  bool operator==(const PolyMatrix& o) const;

  bool is_zero() const;
  int min_degree() const;
  int max_degree() const;
  QMatrix coefficient(int exponent) const;
  PolyMatrix truncate(int max_exp) const;
  PolyMatrix invert_variable() const;
  PolyMatrix substitute_power(int k) const;
  PolyMatrix transpose() const;
  // sum of all entries, as a scalar series
  LaurentPoly entry_sum() const;

  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Inverse power series of m up to t^max_degree. The matrix must be a
// polynomial in t (no negative powers) with invertible constant term.
PolyMatrix series_inverse_truncated(const PolyMatrix& m, int max_degree);

}  // namespace pbench
