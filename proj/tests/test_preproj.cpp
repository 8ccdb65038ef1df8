#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pbench/nc/cache.hpp"
#include "pbench/nc/graded.hpp"
#include "pbench/nc/groebner.hpp"
#include "pbench/preproj/verify.hpp"

using namespace pbench;
using namespace pbench::preproj;

namespace {

// H0 by the three-term recursion H_{n+1} = C H_n - H_{n-1}, kept in plain
// integers and independent of the series-inversion code.
std::vector<std::vector<std::vector<long>>> recursion_oracle(const RootData& rd, int upto) {
  const int r = rd.rank;
  using M = std::vector<std::vector<long>>;
  M prev(r, std::vector<long>(r, 0)), cur(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) cur[i][i] = 1;
  std::vector<M> out{cur};
  for (int n = 1; n <= upto; ++n) {
    M next(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        long s = -prev[i][j];
        for (int k = 0; k < r; ++k) s += rd.adjacency[i][k] * cur[k][j];
        next[i][j] = s;
      }
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

void require_pass(const CheckResult& r) {
  for (const auto& it : r.items) {
    INFO(r.check_id << " " << r.subject << ": " << it.name << " computed " << it.computed.dump() << " expected "
                    << it.expected.dump() << " " << it.note);
    CHECK(it.pass);
  }
  CHECK(r.pass());
}

}  // namespace

TEST_CASE("presentations transcribe the defining relations") {
  SUBCASE("A2 with one arrow") {
    auto rd = rootdata::build_root_data("A2");
    auto p = presentation_of({rd, Mode::Pi0});
    REQUIRE(p.num_generators() == 2);
    REQUIRE(p.relations().size() == 2);
    // vertex 1 is the source of a1: only a1 a1* appears there
    const auto& r0 = p.relations()[0];
    REQUIRE(r0.terms.size() == 1);
    CHECK(p.path_to_string(r0.terms[0].path) == p.path_to_string(p.path({"a1", "a1*"})));
    const auto& r1 = p.relations()[1];
    REQUIRE(r1.terms.size() == 1);
    CHECK(p.path_to_string(r1.terms[0].path) == p.path_to_string(p.path({"a1*", "a1"})));
  }
  SUBCASE("A3 spherical algebra at lambda = 0") {
    auto rd = rootdata::build_root_data("A3");
    auto p = presentation_of({rd, Mode::BsphericalDeformed});
    REQUIRE(p.num_generators() == 3);  // U1 U2 z
    REQUIRE(p.relations().size() == 5);  // two legs, the sum, two centrality
    CHECK(p.relations()[0].terms.size() == 1);
    CHECK(p.relations()[0].terms[0].path.letters == nc::Word{0, 0});
    CHECK(p.relations()[1].terms[0].path.letters == nc::Word{1, 1});
    CHECK(p.relations()[2].terms.size() == 3);
    for (const auto& g : p.generators()) CHECK(g.degree == 2);
  }
  SUBCASE("D4 central extension") {
    auto rd = rootdata::build_root_data("D4");
    auto p = presentation_of({rd, Mode::Pi0mu, rho_weight(rd)});
    CHECK(p.num_generators() == 6 + 4);  // doubled edges, one z loop per vertex
    CHECK(p.relations().size() == 4 + 6);  // vertex relations, one centrality relation per arrow
  }
  SUBCASE("hypotheses are enforced") {
    auto rd = rootdata::build_root_data("A2");
    CHECK_THROWS_AS(presentation_of({rd, Mode::Pi0mu, Weight{1, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(presentation_of({rd, Mode::BsphericalDeformed}), std::invalid_argument);
    auto a3 = rootdata::build_root_data("A3");
    // nodal condition: mu = (1,-1,0) pairs to zero with alpha_1 + alpha_2
    CHECK_THROWS_AS(presentation_of({a3, Mode::Bspherical, Weight{1, -1, 0}}), std::invalid_argument);
  }
}

TEST_CASE("closed-form Hilbert polynomials") {
  for (const char* t : {"A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"}) {
    CAPTURE(t);
    auto rd = rootdata::build_root_data(t);
    const int h = rd.coxeter_number;
    const auto H0 = hilbert_pi0(rd);
    const auto oracle = recursion_oracle(rd, h - 2);
    for (int n = 0; n <= h - 2; ++n) {
      QMatrix c = H0.coefficient(n);
      for (int i = 0; i < rd.rank; ++i)
        for (int j = 0; j < rd.rank; ++j) CHECK(c(i, j) == oracle[n][i][j]);
    }
    CHECK(H0.max_degree() == h - 2);
    require_pass(verify_hilbert_identities(rd));
  }
  SUBCASE("brackets") {
    CHECK(bracket_t2(3) == LaurentPoly(1) + LaurentPoly::monomial(2) + LaurentPoly::monomial(4));
    CHECK(bracket_t2(0).is_zero());
  }
  SUBCASE("series of the algebra with central x starts I + C t") {
    for (const char* t : {"A2", "D4"}) {
      auto rd = rootdata::build_root_data(t);
      auto H = hilbert_pi_series(rd, 4);
      CHECK(H.coefficient(0) == QMatrix::identity(rd.rank));
      CHECK(H.coefficient(1) == rd.adjacency_matrix());
    }
  }
  SUBCASE("ideal powers sum back to the Hilbert polynomial at u = 1") {
    auto rd = rootdata::build_root_data("A2");
    auto Hk = hilbert_ideal_powers(rd, rd.coxeter_number - 1);
    CHECK(Hk[0] == hilbert_pi0(rd));
    PolyMatrix s(rd.rank);
    for (const auto& m : Hk) s = s + m;
    CHECK(s == hilbert_pi0mu(rd));
  }
}

TEST_CASE("preprojective algebra dimensions") {
  const std::vector<std::pair<const char*, long>> expected{{"A2", 4}, {"A3", 10}, {"A4", 20}, {"D4", 28}, {"D5", 60}};
  for (const auto& [t, d] : expected) {
    CAPTURE(t);
    auto rd = rootdata::build_root_data(t);
    CHECK(dim_pi0_formula(rd) == d);
    auto r = verify_pi0(rd);
    require_pass(r);
    CHECK(r.items[1].computed.get<long>() == d);
  }
}

TEST_CASE("central extension") {
  const std::vector<std::pair<const char*, long>> expected{{"A2", 6}, {"A3", 20}, {"D4", 84}};
  for (const auto& [t, d] : expected) {
    CAPTURE(t);
    auto rd = rootdata::build_root_data(t);
    CHECK(dim_pi0mu_formula(rd) == d);
    require_pass(verify_pi0mu(rd, rho_weight(rd)));
    require_pass(verify_pi0mu(rd, std::nullopt));
  }
}

TEST_CASE("flatness of filtered deformations") {
  for (const char* t : {"A2", "A3"}) {
    auto rd = rootdata::build_root_data(t);
    require_pass(verify_flatness(rd, std::nullopt, 3));
  }
  SUBCASE("lambda = 0 reproduces the graded algebra") {
    auto rd = rootdata::build_root_data("A2");
    auto f = nc::build_filtered_basis(presentation_of({rd, Mode::PiLambdaMu, rho_weight(rd), Weight{0, 0}}));
    CHECK(f.total_dimension == 6);
  }
}

TEST_CASE("block decomposition of z") {
  auto a2 = rootdata::build_root_data("A2");
  auto r = verify_block_decomposition(a2, Weight{1, 2});
  require_pass(r);
  // ratios 1, 2, 3/2 with multiplicities 1, 1, 4; z acts by their negatives
  nlohmann::json roots = r.items[1].computed;
  CHECK(roots == nlohmann::json::parse(R"([["-2",1],["-3/2",4],["-1",1]])"));
  CHECK_THROWS_AS(verify_block_decomposition(a2, Weight{1, 1}), std::invalid_argument);

  auto a3 = rootdata::build_root_data("A3");
  auto r3 = verify_block_decomposition(a3, std::nullopt);
  require_pass(r3);
  std::vector<int> mults;
  for (const auto& e : r3.items[1].computed) mults.push_back(e[1].get<int>());
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<int>{1, 1, 1, 4, 4, 9});
}

TEST_CASE("truncated algebra with central x and the Weyl denominator") {
  for (const char* t : {"A2", "A3"}) {
    auto rd = rootdata::build_root_data(t);
    require_pass(verify_pi_truncated(rd, 6));
  }
  require_pass(verify_weyl_denominator(rootdata::build_root_data("A2")));
}

TEST_CASE("powers of the ideal generated by z") {
  for (const char* t : {"A2", "A3", "D4"}) require_pass(verify_ideal_powers(rootdata::build_root_data(t)));
}

TEST_CASE("spherical corner algebras") {
  auto a3 = rootdata::build_root_data("A3");
  auto r = verify_B(a3, 3);
  require_pass(r);
  CHECK(r.items[0].computed.get<std::string>() == (LaurentPoly(1) + LaurentPoly::monomial(2, 2) + LaurentPoly::monomial(4)).to_string("t"));
  CHECK(r.items[1].computed.get<long>() == 4);

  auto d4 = rootdata::build_root_data("D4");
  auto rd4 = verify_B(d4, 3);
  require_pass(rd4);
  CHECK(rd4.items[1].computed.get<long>() == 12);

  require_pass(cross_check_corner(a3, std::nullopt));
  auto c = cross_check_corner(d4, std::nullopt);
  require_pass(c);
  long total = 0;
  for (const auto& d : c.items[0].computed) total += d.get<long>();
  CHECK(total == 12);
  CHECK(cross_check_corner(a3, std::nullopt).items[0].computed == nlohmann::json::parse("[1,0,2,0,1]"));

  SUBCASE("deformed corner with a filtration has the same size") {
    auto nd = rootdata::build_nodal_data(d4);
    auto f = nc::build_filtered_basis(presentation_of({d4, Mode::Bspherical, rho_weight(d4), Weight{1, 2, -3, 5}}));
    CHECK(f.total_dimension == static_cast<long>(d4.coxeter_number) * nd.q1 * nd.q2 / 2);
  }
}

TEST_CASE("results do not depend on the orientation") {
  for (const auto& [t, flips] : std::vector<std::pair<const char*, std::vector<int>>>{
           {"A3", {1}}, {"D4", {0, 2}}, {"D5", {3}}, {"E6", {0, 4}}}) {
    CAPTURE(t);
    auto base = rootdata::build_root_data(t);
    auto flipped = rootdata::build_root_data(t, flips);
    auto t1 = nc::build_graded_basis(presentation_of({base, Mode::Pi0}));
    auto t2 = nc::build_graded_basis(presentation_of({flipped, Mode::Pi0}));
    CHECK(table_hilbert(t1) == table_hilbert(t2));
    if (std::string(t) != "E6") {
      auto u1 = nc::build_graded_basis(presentation_of({base, Mode::Pi0mu, rho_weight(base)}));
      auto u2 = nc::build_graded_basis(presentation_of({flipped, Mode::Pi0mu, rho_weight(flipped)}));
      CHECK(table_hilbert(u1) == table_hilbert(u2));
      require_pass(cross_check_corner(flipped, std::nullopt));
    }
  }
}

TEST_CASE("seeded sampling is reproducible") {
  auto rd = rootdata::build_root_data("D4");
  auto accept = [&](const Weight& w) { return is_regular(rd, w); };
  CHECK(random_weight(4, 7, accept) == random_weight(4, 7, accept));
  CHECK(random_weight(4, 7, accept) != random_weight(4, 8, accept));
  auto a = verify_pi0mu(rd, std::nullopt, {.seed = 3});
  auto b = verify_pi0mu(rd, std::nullopt, {.seed = 3});
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK_THROWS_AS(random_weight(2, 1, [](const Weight&) { return false; }), std::runtime_error);
}

TEST_CASE("table cache") {
  auto rd = rootdata::build_root_data("A3");
  auto p = presentation_of({rd, Mode::Pi0mu, rho_weight(rd)});
  auto q = presentation_of({rd, Mode::PiLambdaMu, rho_weight(rd), Weight{1, 0, 0}});
  nc::GradedOptions o;
  CHECK(nc::cache_key(p, o) == nc::cache_key(presentation_of({rd, Mode::Pi0mu, rho_weight(rd)}), o));
  CHECK(nc::cache_key(p, o) != nc::cache_key(q, o));
  CHECK(nc::cache_key(p, o, nc::kEngineVersion) != nc::cache_key(p, o, nc::kEngineVersion + 1));

  const auto dir = std::filesystem::temp_directory_path() / "pbench-cache-test";
  std::filesystem::remove_all(dir);
  auto fresh = nc::build_graded_basis_cached(p, o, dir);
  auto again = nc::build_graded_basis_cached(p, o, dir);
  CHECK(fresh.to_json() == again.to_json());
  // a corrupted entry is detected and rebuilt
  for (const auto& f : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(f.path());
    out << R"({"key":"0","checksum":"0","table":{}})";
  }
  auto rebuilt = nc::build_graded_basis_cached(p, o, dir);
  CHECK(rebuilt.to_json() == fresh.to_json());
  std::filesystem::remove_all(dir);
}
