#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pbench/exact/rational.hpp"

namespace pbench {

// Element of the prime field F_p for a 61-bit-or-smaller prime p. The modulus
// is a process-wide setting so that values stay one machine word.
class ModP {
 public:
  ModP() = default;
  explicit ModP(uint64_t v) : v_(v % modulus_) {}
  static ModP from_rational(const Rational& x);

  static uint64_t modulus() { return modulus_; }
  static void set_modulus(uint64_t p) { modulus_ = p; }

  uint64_t value() const { return v_; }
  ModP operator+(ModP o) const;
  ModP operator-(ModP o) const;
  ModP operator*(ModP o) const;
  ModP operator/(ModP o) const;
  ModP operator-() const { return ModP(v_ == 0 ? 0 : modulus_ - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  bool operator==(ModP o) const { return v_ == o.v_; }
  bool operator!=(ModP o) const { return v_ != o.v_; }
  ModP inverse() const;

 private:
  uint64_t v_ = 0;
  static inline uint64_t modulus_ = 2305843009213693951ULL;  // 2^61 - 1
};

bool is_prime_u64(uint64_t n);
// A prime drawn from [2^59, 2^60) using the given seed.
uint64_t random_prime_60bit(uint64_t seed);

template <class F>
inline bool is_zero_scalar(const F& x) {
  return x == F(0);
}
template <>
inline bool is_zero_scalar<Rational>(const Rational& x) {
  return sgn(x) == 0;
}

template <class F>
using SparseVec = std::vector<std::pair<int, F>>;  // sorted by column, no zeros

// Sparse row-major matrix.
template <class F>
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec<F>> row_data;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}
  void set(int i, int j, const F& v);
  void add_row(SparseVec<F> row);
  size_t nonzeros() const;
};

using QSparse = SparseMatrix<Rational>;
using PSparse = SparseMatrix<ModP>;

template <class F>
struct RankKernel {
  int rank = 0;
  std::vector<std::vector<F>> kernel;  // dense kernel vectors, length cols
};

// Exact rank and right kernel; pivots picked by a Markowitz count.
template <class F>
RankKernel<F> rank_and_kernel(const SparseMatrix<F>& m);
template <class F>
int sparse_rank(const SparseMatrix<F>& m);

PSparse reduce_mod_p(const QSparse& m);

struct RankOptions {
  size_t confirm_threshold = 20000;  // confirm over Q at or below this many nonzeros
  uint64_t prime_seed = 1;
};
struct TwoTierRank {
  int rank = 0;
  int rank_mod_p = 0;
  bool confirmed_over_q = false;
  uint64_t prime = 0;
};
// F_p rank, confirmed over Q when the matrix is small enough.
TwoTierRank two_tier_rank(const QSparse& m, const RankOptions& opts = {});

// Incrementally maintained reduced row echelon basis. The pivot of a row is
// its smallest column index; every stored row is monic at its pivot and has
// zeros in every other pivot column.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols = 0) : cols_(cols) {}
  // Returns true if the row was independent of the current span.
  bool insert(SparseVec<F> row);
  SparseVec<F> reduce(SparseVec<F> row) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return rows_.count(col) > 0; }
  const SparseVec<F>& pivot_row(int col) const { return rows_.at(col); }
  const std::map<int, SparseVec<F>>& rows() const { return rows_; }

 private:
  int cols_;
  std::map<int, SparseVec<F>> rows_;
};

// a + c*b on sparse vectors
template <class F>
SparseVec<F> axpy(const SparseVec<F>& a, const F& c, const SparseVec<F>& b);

}  // namespace pbench
