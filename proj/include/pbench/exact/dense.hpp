#pragma once

#include <vector>

#include "pbench/exact/rational.hpp"

namespace pbench {

// Small dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix from_ints(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const QMatrix& o) const;
  bool is_zero() const;
  QMatrix transpose() const;

  Rational trace() const;
  int rank() const;
  // Throws std::domain_error if singular.
  QMatrix inverse() const;
  // Basis of {v : M v = 0}.
  std::vector<std::vector<Rational>> kernel() const;
  // Monic characteristic polynomial det(T - M), coefficients in ascending order.
  std::vector<Rational> charpoly() const;

  nlohmann::json to_json() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Rational polynomial helpers on ascending coefficient vectors.
std::vector<Rational> poly_trim(std::vector<Rational> p);
std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b);
// Divides p by (T - root) as many times as possible, returning the multiplicity.
int poly_divide_root(std::vector<Rational>& p, const Rational& root);

}  // namespace pbench
