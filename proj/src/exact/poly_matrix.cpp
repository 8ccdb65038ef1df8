#include "pbench/exact/poly_matrix.hpp"

#include <climits>
#include <stdexcept>

namespace pbench {

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

PolyMatrix PolyMatrix::constant(const QMatrix& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("non-square constant matrix");
  PolyMatrix m(c.rows());
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) m(i, j) = LaurentPoly(c(i, j));
  return m;
}

PolyMatrix PolyMatrix::from_coefficients(const std::vector<QMatrix>& coeffs, int min_exp) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  int n = coeffs[0].rows();
  PolyMatrix m(n);
  for (size_t k = 0; k < coeffs.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j).add_term(min_exp + static_cast<int>(k), coeffs[k](i, j));
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  PolyMatrix r = *this;
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  PolyMatrix r = *this;
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  PolyMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator*(const LaurentPoly& p) const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e *= p;
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

int PolyMatrix::min_degree() const {
  int d = INT_MAX;
  for (const auto& e : entries_)
    if (!e.is_zero()) d = std::min(d, e.min_degree());
  if (d == INT_MAX) throw std::domain_error("degree of zero matrix");
  return d;
}

int PolyMatrix::max_degree() const {
  int d = INT_MIN;
  for (const auto& e : entries_)
    if (!e.is_zero()) d = std::max(d, e.max_degree());
  if (d == INT_MIN) throw std::domain_error("degree of zero matrix");
  return d;
}

QMatrix PolyMatrix::coefficient(int exponent) const {
  QMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).coeff(exponent);
  return m;
}

PolyMatrix PolyMatrix::truncate(int max_exp) const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e = e.truncate(max_exp);
  return r;
}

PolyMatrix PolyMatrix::invert_variable() const { return substitute_power(-1); }

PolyMatrix PolyMatrix::substitute_power(int k) const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e = e.substitute_power(k);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

LaurentPoly PolyMatrix::entry_sum() const {
  LaurentPoly s;
  for (const auto& e : entries_) s += e;
  return s;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) row.push_back((*this)(i, k).to_json());
    j.push_back(row);
  }
  return j;
}

PolyMatrix series_inverse_truncated(const PolyMatrix& m, int max_degree) {
  const int n = m.size();
  if (!m.is_zero() && m.min_degree() < 0) throw std::domain_error("series inverse needs a polynomial matrix");
  int top = m.is_zero() ? 0 : m.max_degree();
  std::vector<QMatrix> mk;
  for (int k = 0; k <= top; ++k) mk.push_back(m.coefficient(k));
  QMatrix inv0;
  try {
    inv0 = mk[0].inverse();
  } catch (const std::domain_error&) {
    throw std::domain_error("series inverse: constant term is singular");
  }
  std::vector<QMatrix> x;
  x.push_back(inv0);
  for (int d = 1; d <= max_degree; ++d) {
    QMatrix acc(n, n);
    for (int k = 1; k <= std::min(d, top); ++k)
      if (!mk[k].is_zero()) acc = acc + mk[k] * x[d - k];
    x.push_back((inv0 * acc) * Rational(-1));
  }
  // Solved from M X = I. A one-sided inverse of a power series matrix with
  // invertible constant term is two-sided.
  return PolyMatrix::from_coefficients(x, 0);
}

}  // namespace pbench
