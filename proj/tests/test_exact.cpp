#include <doctest.h>

#include <random>

#include "pbench/exact/dense.hpp"
#include "pbench/exact/laurent.hpp"
#include "pbench/exact/poly_matrix.hpp"
#include "pbench/exact/sparse.hpp"

using namespace pbench;

namespace {

// q-binomial by counting i-subsets of {0..p-1} weighted by their sum
LaurentPoly subset_count_qbinom(int p, int i) {
  LaurentPoly r;
  for (unsigned mask = 0; mask < (1U << p); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    int s = 0;
    for (int b = 0; b < p; ++b)
      if (mask & (1U << b)) s += b;
    r.add_term(s - i * (i - 1) / 2, 1);
  }
  return r;
}

QSparse random_sparse(std::mt19937_64& rng, int rows, int cols, double density) {
  QSparse m(rows, cols);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (u(rng) < density) m.set(i, j, Rational(v(rng)));
  return m;
}

QMatrix to_dense(const QSparse& s) {
  QMatrix d(s.rows, s.cols);
  for (int i = 0; i < s.rows; ++i)
    for (const auto& [c, v] : s.row_data[i]) d(i, c) = v;
  return d;
}

}  // namespace

TEST_CASE("rank and kernel on small matrices") {
  QSparse zero(3, 3);
  auto z = rank_and_kernel(zero);
  CHECK(z.rank == 0);
  CHECK(z.kernel.size() == 3);

  QSparse id(4, 4);
  for (int i = 0; i < 4; ++i) id.set(i, i, 1);
  auto idr = rank_and_kernel(id);
  CHECK(idr.rank == 4);
  CHECK(idr.kernel.empty());

  QSparse m(2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  auto mr = rank_and_kernel(m);
  CHECK(mr.rank == 1);
  REQUIRE(mr.kernel.size() == 1);
  // proportional to (-2, 1)
  CHECK(mr.kernel[0][0] == -2 * mr.kernel[0][1]);
  CHECK(sgn(mr.kernel[0][1]) != 0);
}

TEST_CASE("sparse elimination agrees with dense elimination and the prime field") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 12), c = 1 + static_cast<int>(rng() % 12);
    QSparse m = random_sparse(rng, r, c, 0.3);
    // duplicate a combination of rows to force dependencies
    if (r > 2) {
      SparseVec<Rational> combo = axpy(m.row_data[0], Rational(3), m.row_data[1]);
      m.row_data[2] = combo;
    }
    auto rk = rank_and_kernel(m);
    QMatrix d = to_dense(m);
    CHECK(rk.rank == d.rank());
    CHECK(static_cast<int>(rk.kernel.size()) == c - rk.rank);
    for (const auto& v : rk.kernel) {
      auto image = d * v;
      for (const auto& x : image) CHECK(sgn(x) == 0);
    }
    auto two = two_tier_rank(m, {20000, static_cast<uint64_t>(trial)});
    CHECK(two.confirmed_over_q);
    CHECK(two.rank == two.rank_mod_p);
    CHECK(is_prime_u64(two.prime));
    CHECK(two.prime >= (1ULL << 59));
  }
}

TEST_CASE("echelon basis keeps rows reduced") {
  EchelonBasis<Rational> eb(4);
  CHECK(eb.insert({{0, Rational(1)}, {1, Rational(2)}}));
  CHECK(eb.insert({{1, Rational(1)}, {3, Rational(1)}}));
  CHECK_FALSE(eb.insert({{0, Rational(2)}, {1, Rational(5)}, {3, Rational(1)}}));
  CHECK(eb.rank() == 2);
  // first row must have lost its column-1 entry
  const auto& r0 = eb.pivot_row(0);
  for (const auto& [c, v] : r0) CHECK(c != 1);
}

TEST_CASE("q-integers and q-binomials") {
  CHECK(qint(3) == LaurentPoly::monomial(0) + LaurentPoly::monomial(1) + LaurentPoly::monomial(2));
  CHECK(qbinom(2, 1) == LaurentPoly::monomial(0) + LaurentPoly::monomial(1));
  LaurentPoly b42 = qbinom(4, 2);
  CHECK(b42.to_string() == "1 + q + 2*q^2 + q^3 + q^4");
  for (int p = 0; p <= 9; ++p)
    for (int i = 0; i <= p; ++i) {
      CHECK(qbinom(p, i) == subset_count_qbinom(p, i));
      CHECK(qbinom(p, i) == qbinom(p, p - i));
      if (p > 0 && i > 0 && i < p)
        CHECK(qbinom(p, i) == qbinom(p - 1, i - 1) + qbinom(p - 1, i).shift(i));
      LaurentPoly b = qbinom(p, i);
      for (const auto& [e, c] : b.terms()) CHECK(sgn(c) > 0);
    }
  CHECK_THROWS(qbinom(3, 4));
  CHECK_THROWS(qbinom(3, -1));
}

TEST_CASE("Laurent division") {
  LaurentPoly a = (qint(3) * qint(5)).shift(-2);
  auto q = LaurentPoly::divide_exact(a, qint(5));
  REQUIRE(q);
  CHECK(*q == qint(3).shift(-2));
  CHECK_FALSE(LaurentPoly::divide_exact(qint(3), qint(2)));
  CHECK(qint_symmetric(3).to_string("v") == "v^-2 + 1 + v^2");
}

TEST_CASE("truncated series inverse") {
  SUBCASE("geometric series") {
    PolyMatrix m(1);
    m(0, 0) = LaurentPoly(1) - LaurentPoly::monomial(1);
    auto inv = series_inverse_truncated(m, 3);
    CHECK(inv(0, 0) == qint(4));
  }
  SUBCASE("identity") {
    auto inv = series_inverse_truncated(PolyMatrix::identity(3), 5);
    CHECK(inv == PolyMatrix::identity(3));
  }
  SUBCASE("1 - Ct + t^2 for A2") {
    QMatrix c = QMatrix::from_ints({{0, 1}, {1, 0}});
    PolyMatrix m = PolyMatrix::identity(2) - PolyMatrix::constant(c) * LaurentPoly::monomial(1) +
                   PolyMatrix::identity(2) * LaurentPoly::monomial(2);
    auto inv = series_inverse_truncated(m, 2);
    PolyMatrix expected = PolyMatrix::identity(2) + PolyMatrix::constant(c) * LaurentPoly::monomial(1) +
                          PolyMatrix::constant(c * c - QMatrix::identity(2)) * LaurentPoly::monomial(2);
    CHECK(inv == expected);
    for (int n : {4, 9}) {
      auto x = series_inverse_truncated(m, n);
      CHECK((x * m).truncate(n) == PolyMatrix::identity(2));
      CHECK((m * x).truncate(n) == PolyMatrix::identity(2));
    }
  }
  SUBCASE("singular constant term") {
    PolyMatrix m(1);
    m(0, 0) = LaurentPoly::monomial(1);
    CHECK_THROWS_AS(series_inverse_truncated(m, 2), std::domain_error);
  }
}

TEST_CASE("characteristic polynomial") {
  QMatrix m = QMatrix::from_ints({{2, 1, 0}, {0, 2, 0}, {1, 1, 3}});
  auto p = m.charpoly();
  // (T-2)^2 (T-3)
  CHECK(poly_divide_root(p, Rational(2)) == 2);
  CHECK(poly_divide_root(p, Rational(3)) == 1);
  CHECK(p.size() == 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
    auto cp = a.charpoly();
    // Cayley-Hamilton
    QMatrix acc(n, n), pw = QMatrix::identity(n);
    for (const auto& c : cp) {
      acc = acc + pw * c;
      pw = pw * a;
    }
    CHECK(acc.is_zero());
    CHECK(cp.back() == 1);
    CHECK(-cp[n - 1] == a.trace());
  }
}
