#include <doctest.h>

#include <random>

#include "pbench/nc/groebner.hpp"
#include "pbench/nc/oracle.hpp"
#include "pbench/nc/structure.hpp"

using namespace pbench;
using namespace pbench::nc;

namespace {

Term term(long c, Path p) { return Term{Rational(c), std::move(p)}; }

AlgebraPresentation one_loop(int nilpotency) {
  AlgebraPresentation p(1);
  p.add_generator("x", 0, 0, 1);
  if (nilpotency > 0) p.add_relation({term(1, p.path_of(Word(nilpotency, 0)))}, "nil");
  return p;
}

AlgebraPresentation a2_preprojective() {
  AlgebraPresentation p(2);
  p.add_generator("a", 0, 1, 1);
  p.add_generator("a*", 1, 0, 1);
  p.add_relation({term(1, p.path({"a", "a*"}))}, "v1");
  p.add_relation({term(-1, p.path({"a*", "a"}))}, "v2");
  return p;
}

AlgebraPresentation mat2() {
  AlgebraPresentation p(2);
  p.add_generator("a", 0, 1, 1);
  p.add_generator("b", 1, 0, 1);
  p.add_relation({term(1, p.path({"a", "b"})), term(-1, p.idempotent(0))}, "ab");
  p.add_relation({term(1, p.path({"b", "a"})), term(-1, p.idempotent(1))}, "ba");
  return p;
}

}  // namespace

TEST_CASE("word-span oracle on toy presentations") {
  auto free_loop = word_span_oracle(one_loop(0), 3);
  CHECK(free_loop.dims == std::vector<long>{1, 1, 1, 1});
  auto a2 = word_span_oracle(a2_preprojective(), 3);
  CHECK(a2.dims == std::vector<long>{2, 2, 0, 0});
  auto sq = word_span_oracle(one_loop(2), 2);
  CHECK(sq.dims == std::vector<long>{1, 1, 0});
  CHECK(sq.all_confirmed_over_q);
  OracleOptions tiny;
  tiny.max_words = 5;
  CHECK_THROWS_AS(word_span_oracle(one_loop(0), 10, tiny), std::length_error);
}

TEST_CASE("graded engine on toy presentations") {
  auto cube = build_graded_basis(one_loop(3));
  CHECK(cube.terminated());
  CHECK(cube.hilbert_dims()[0] == 1);
  CHECK(cube.dim(1) == 1);
  CHECK(cube.dim(2) == 1);
  CHECK(cube.dim(3) == 0);
  CHECK(cube.top_degree() == 2);

  auto a2 = build_graded_basis(a2_preprojective());
  CHECK(a2.total_dim() == 4);
  CHECK(a2.basis(1, 0, 1).front().letters == Word{0});
  CHECK(a2.basis(1, 1, 0).front().letters == Word{1});
  auto oracle = word_span_oracle(a2_preprojective(), a2.computed_degree());
  CHECK(oracle.dims == a2.hilbert_dims());

  GradedOptions truncated;
  truncated.max_degree = 5;
  auto free_loop = build_graded_basis(one_loop(0), truncated);
  CHECK_FALSE(free_loop.terminated());
  CHECK(free_loop.dim(5) == 1);
  CHECK_THROWS(free_loop.right_mult(0, 5, 0));
}

TEST_CASE("graded engine agrees with the oracle on a nontrivial quotient") {
  // two loops with xy = yx, x^3 = y^2 = 0 (commutative, dim 6)
  AlgebraPresentation p(1);
  p.add_generator("x", 0, 0, 1);
  p.add_generator("y", 0, 0, 1);
  p.add_relation({term(1, p.path({"x", "y"})), term(-1, p.path({"y", "x"}))}, "comm");
  p.add_relation({term(1, p.path({"x", "x", "x"}))}, "x3");
  p.add_relation({term(1, p.path({"y", "y"}))}, "y2");
  auto tab = build_graded_basis(p);
  CHECK(tab.total_dim() == 6);
  auto oracle = word_span_oracle(p, tab.computed_degree());
  CHECK(oracle.dims == tab.hilbert_dims());
  auto fr = frobenius_check(tab, tab.top_degree());
  CHECK(fr.precondition_ok);
  CHECK(fr.pass);
  // JSON round trip keeps every product
  auto back = GradedBasisTable::from_json(p, tab.to_json());
  CHECK(back.hilbert_dims() == tab.hilbert_dims());
  auto rep1 = regular_rep_from_table(tab), rep2 = regular_rep_from_table(back);
  for (int g = 0; g < 2; ++g) CHECK(rep1.left[g].to_json() == rep2.left[g].to_json());
  CHECK(relation_violations(rep1) == 0);
}

TEST_CASE("socle") {
  auto cube = build_graded_basis(one_loop(3));
  auto soc = socle(cube);
  REQUIRE(soc.size() == 1);
  CHECK(soc[0].degree == 2);

  auto m = build_filtered_basis(mat2());
  CHECK(m.total_dimension == 4);
  CHECK(socle(m.rep).size() == 4);
  CHECK(trace_form_rank(m.rep) == 4);

  auto cube_f = build_filtered_basis(one_loop(3));
  auto rs = socle(cube_f.rep);
  REQUIRE(rs.size() == 1);
  CHECK(cube_f.rep.element_to_string(rs[0]).find("x x") != std::string::npos);
}

TEST_CASE("Frobenius check") {
  auto cube = build_graded_basis(one_loop(3));
  auto fr = frobenius_check(cube, 2);
  CHECK(fr.precondition_ok);
  CHECK(fr.top_is_permutation);
  CHECK(fr.pass);

  AlgebraPresentation p(1);
  p.add_generator("x", 0, 0, 1);
  p.add_generator("y", 0, 0, 1);
  for (auto w : {std::vector<std::string>{"x", "y"}, {"y", "x"}, {"x", "x"}, {"y", "y"}})
    p.add_relation({term(1, p.path(w))});
  auto tab = build_graded_basis(p);
  CHECK(tab.hilbert_dims()[1] == 2);
  auto bad = frobenius_check(tab, 1);
  CHECK_FALSE(bad.precondition_ok);
  CHECK_FALSE(bad.pass);
  CHECK(bad.precondition_message.find("palindromic") != std::string::npos);
}

TEST_CASE("trace form") {
  auto sq = build_filtered_basis(one_loop(2));
  CHECK(sq.total_dimension == 2);
  CHECK(trace_form_rank(sq.rep) == 1);
  CHECK(jacobson_radical(sq.rep).size() == 1);
}

TEST_CASE("characteristic polynomials") {
  auto a2 = regular_rep_from_table(build_graded_basis(a2_preprojective()));
  auto zero = charpoly_of_element(a2, a2.zero());
  REQUIRE(zero.roots.size() == 1);
  CHECK(zero.roots[0] == std::make_pair(Rational(0), 4));
  auto e1 = charpoly_of_element(a2, a2.idempotent(0));
  CHECK(e1.splits());
  CHECK(e1.roots == std::vector<std::pair<Rational, int>>{{Rational(0), 2}, {Rational(1), 2}});
  CHECK(e1.coeffs == poly_from_roots(e1.roots));
}

TEST_CASE("filtered engine") {
  SUBCASE("commutative toy") {
    AlgebraPresentation p(1);
    p.add_generator("u", 0, 0, 1);
    p.add_generator("v", 0, 0, 1);
    p.add_relation({term(1, p.path({"u", "v"})), term(-1, p.path({"v", "u"}))});
    p.add_relation({term(1, p.path({"u", "u"}))});
    p.add_relation({term(1, p.path({"v", "v"}))});
    auto f = build_filtered_basis(p);
    CHECK(f.total_dimension == 4);
    CHECK(f.gr_dims == std::vector<long>{1, 2, 1});
    REQUIRE(f.gr);
    CHECK(f.gr->hilbert_dims() == build_graded_basis(p).hilbert_dims());
  }
  SUBCASE("a constant term kills the algebra") {
    AlgebraPresentation p(1);
    p.add_generator("x", 0, 0, 1);
    p.add_relation({term(1, p.path({"x"})), term(-1, p.idempotent(0))});
    p.add_relation({term(1, p.path({"x", "x"}))});
    auto f = build_filtered_basis(p);
    CHECK(f.total_dimension == 0);
  }
  SUBCASE("infinite dimension is reported") {
    FilteredOptions o;
    o.max_normal_degree = 20;
    CHECK_THROWS_AS(build_filtered_basis(one_loop(0), o), std::runtime_error);
  }
  SUBCASE("regular representation is an algebra homomorphism") {
    auto m = build_filtered_basis(mat2());
    CHECK(relation_violations(m.rep) == 0);
    std::mt19937_64 rng(11);
    const int n = m.rep.dimension;
    for (int trial = 0; trial < 100; ++trial) {
      QVec a = m.rep.basis_vector(rng() % n), b = m.rep.basis_vector(rng() % n), c = m.rep.basis_vector(rng() % n);
      CHECK(m.rep.multiply(m.rep.multiply(a, b), c) == m.rep.multiply(a, m.rep.multiply(b, c)));
    }
  }
}

TEST_CASE("presentation validation and serialization") {
  auto p = a2_preprojective();
  auto q = AlgebraPresentation::from_json(p.to_json());
  CHECK(q.content_hash() == p.content_hash());
  CHECK_THROWS(p.path({"a", "a"}));
  CHECK_THROWS(AlgebraPresentation(0).validate());
  AlgebraPresentation r(1);
  CHECK_THROWS(r.add_generator("x", 0, 1, 1));
  CHECK_THROWS(r.add_generator("x", 0, 0, 0));
}
