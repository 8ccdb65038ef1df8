#include "pbench/exact/dense.hpp"

#include <stdexcept>
#include <utility>

namespace pbench {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  QMatrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  QMatrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

std::vector<Rational> QMatrix::operator*(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch");
  std::vector<Rational> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (sgn(m(i, col)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int QMatrix::rank() const {
  QMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
  QMatrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> QMatrix::charpoly() const {
  if (rows_ != cols_) throw std::invalid_argument("charpoly of non-square matrix");
  const int n = rows_;
  QMatrix h = *this;
  // similarity reduction to upper Hessenberg form
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (int j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (int j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Rational pivot_inv = 1 / h(m, m - 1);
    for (int k = m + 1; k < n; ++k) {
      if (sgn(h(k, m - 1)) == 0) continue;
      Rational u = h(k, m - 1) * pivot_inv;
      for (int j = 0; j < n; ++j)
        if (sgn(h(m, j)) != 0) h(k, j) -= u * h(m, j);
      for (int j = 0; j < n; ++j)
        if (sgn(h(j, k)) != 0) h(j, m) += u * h(j, k);
    }
  }
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Rational> cur(m + 1);
    for (size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Rational prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (sgn(prod) == 0) break;
      Rational f = h(i - 1, m - 1) * prod;
      if (sgn(f) == 0) continue;
      for (size_t k = 0; k < p[i - 1].size(); ++k) cur[k] -= f * p[i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

nlohmann::json QMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < cols_; ++k) row.push_back(rational_to_json((*this)(i, k)));
    j.push_back(row);
  }
  return j;
}

std::vector<Rational> poly_trim(std::vector<Rational> p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

int poly_divide_root(std::vector<Rational>& p, const Rational& root) {
  int mult = 0;
  p = poly_trim(std::move(p));
  while (p.size() > 1) {
    // synthetic division
    std::vector<Rational> q(p.size() - 1);
    Rational carry = 0;
    for (size_t k = p.size() - 1; k >= 1; --k) {
      carry = p[k] + carry * root;
      q[k - 1] = carry;
    }
    Rational rem = p[0] + carry * root;
    if (sgn(rem) != 0) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace pbench
