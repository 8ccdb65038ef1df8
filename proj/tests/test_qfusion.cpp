#include <doctest.h>

#include <random>

#include "pbench/nc/graded.hpp"
#include "pbench/preproj/presentations.hpp"
#include "pbench/preproj/verify.hpp"
#include "pbench/qfusion/fusion.hpp"
#include "pbench/qfusion/heisenberg.hpp"
#include "pbench/qfusion/verify.hpp"

using namespace pbench;
using namespace pbench::qfusion;

namespace {

// Representation on span{z^m t^n}: y multiplies by t, x = z D_q with
// D_q t^n = [n]_q t^{n-1}, and z multiplies by z. It satisfies xy - q yx = z.
using RepVec = std::map<std::pair<int, int>, LaurentPoly>;  // (m, n) -> coeff

RepVec apply_letter(char c, const RepVec& v) {
  RepVec out;
  for (const auto& [k, coef] : v) {
    const auto [m, n] = k;
    if (c == 'y') out[{m, n + 1}] += coef;
    if (c == 'z') out[{m + 1, n}] += coef;
    if (c == 'x' && n > 0) out[{m + 1, n - 1}] += coef * qint(n);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

RepVec apply_word(const std::string& w, RepVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_letter(*it, v);
  return v;
}

RepVec apply_element(const HeisenbergElement& e, const RepVec& v) {
  RepVec out;
  for (const auto& [w, c] : to_words(e))
    for (const auto& [k, d] : apply_word(w, v)) out[k] += c * d;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly q(int e) { return LaurentPoly::monomial(e); }

}  // namespace

TEST_CASE("normal form rewriting") {
  CHECK(normalize_word("xy") == HeisenbergElement::monomial(1, 1, 0, q(1)) + HeisenbergElement::monomial(0, 0, 1));
  CHECK(normalize_word("xyy") ==
        HeisenbergElement::monomial(2, 1, 0, q(2)) + HeisenbergElement::monomial(1, 0, 1, LaurentPoly(1) + q(1)));
  CHECK(normalize_word("yx") == HeisenbergElement::monomial(1, 1, 0));
  CHECK(normalize_word("zyx") == HeisenbergElement::monomial(1, 1, 1));
  CHECK_THROWS_AS(normalize_word("xw"), std::invalid_argument);

  SUBCASE("agrees with the polynomial representation") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::string w;
      for (int k = gen() % 7; k > 0; --k) w += "xyz"[gen() % 3];
      const auto nf = normalize_word(w);
      CHECK(nf.degree() == (w.empty() ? 0 : nf.degree()));
      for (int N = 0; N <= 6; ++N) {
        RepVec v{{{0, N}, LaurentPoly(1)}};
        CHECK(apply_element(nf, v) == apply_word(w, v));
      }
    }
  }
}

TEST_CASE("closed commutation formula") {
  CHECK(closed_commutation(1, 1) == normalize_word("xy"));
  CHECK(closed_commutation(0, 5) == HeisenbergElement::monomial(5, 0, 0));
  CHECK(closed_commutation(2, 2).coeff(2, 2, 0) == q(4));
  for (int p = 0; p <= 6; ++p)
    for (int j = 0; j <= 6; ++j) {
      CAPTURE(p);
      CAPTURE(j);
      const auto c = closed_commutation(p, j);
      CHECK(c == normalize_word(std::string(p, 'x') + std::string(j, 'y')));
      // and against the representation, independently of the rewriting
      for (int N = 0; N <= 4; ++N) {
        RepVec v{{{0, N}, LaurentPoly(1)}};
        CHECK(apply_element(c, v) == apply_word(std::string(p, 'x') + std::string(j, 'y'), v));
      }
    }
}

TEST_CASE("U_q(sl2) action") {
  for (int j = 0; j <= 6; ++j) CHECK(uq_action(UqGenerator::E, HeisenbergElement::monomial(j, 0, 0)).is_zero());
  CHECK(uq_action(UqGenerator::E, HeisenbergElement::monomial(0, 1, 0)) == HeisenbergElement::monomial(1, 0, 0));
  CHECK(uq_action(UqGenerator::F, HeisenbergElement::monomial(1, 0, 0)) == HeisenbergElement::monomial(0, 1, 0));
  CHECK(uq_action(UqGenerator::K, HeisenbergElement::monomial(3, 1, 2)) == HeisenbergElement::monomial(3, 1, 2, q(2)));
  CHECK(uq_action(UqGenerator::Kinv, uq_action(UqGenerator::K, normalize_word("xxyzy"))) == normalize_word("xxyzy"));
  SUBCASE("f(y^{j+1}) as a q-weighted sum of words") {
    for (int j = 0; j <= 5; ++j) {
      WordElement expected;
      for (int s = 0; s <= j; ++s) expected[std::string(s, 'y') + "x" + std::string(j - s, 'y')] += q(-s);
      CHECK(uq_action(UqGenerator::F, HeisenbergElement::monomial(j + 1, 0, 0)) == normalize(expected));
    }
  }
  SUBCASE("e f - f e acts as (K - K^{-1}) / (q - q^{-1})") {
    // on weight vectors of weight w: [e,f] = [w] symmetric bracket
    for (const auto& m : degree_basis(4)) {
      const auto a = HeisenbergElement::monomial(m[0], m[1], m[2]);
      const auto ef = uq_action(UqGenerator::E, uq_action(UqGenerator::F, a));
      const auto fe = uq_action(UqGenerator::F, uq_action(UqGenerator::E, a));
      const int w = m[0] - m[1];
      LaurentPoly bracket = w >= 0 ? qint_symmetric(w) : -qint_symmetric(-w);
      CHECK(ef - fe == a * bracket);
    }
  }
}

TEST_CASE("characters and their decomposition") {
  CHECK(graded_character(2) == LaurentPoly::monomial(2) + LaurentPoly(2) + LaurentPoly::monomial(-2));
  CHECK(decompose(graded_character(2)) == FusionElement{1, 0, 1});
  CHECK(decompose(graded_character(0)) == FusionElement{1});
  CHECK(decompose(graded_character(5)) == FusionElement{0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(decompose(LaurentPoly::monomial(1)), std::domain_error);
  for (int n = 0; n <= 12; ++n) {
    int count = 0;
    for (int m = 0; 2 * m <= n; ++m) count += n - 2 * m + 1;
    CHECK(static_cast<int>(degree_basis(n).size()) == count);
  }
}

TEST_CASE("fusion rules") {
  CHECK(verlinde_product(1, 1, 2) == FusionElement{1, 0, 1});
  CHECK(verlinde_product(1, 1, 1) == FusionElement{1, 0});
  CHECK(clebsch_gordan(2, 3) == FusionElement{0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(verlinde_product(3, 1, 2), std::out_of_range);
  const QMatrix M = QMatrix::from_ints({{1, 2}, {3, 4}});
  CHECK(tchebysheff(2, M) == M * M - QMatrix::identity(2));
  const QMatrix C = QMatrix::from_ints({{0, 1}, {1, 0}});
  CHECK(tchebysheff(2, C).is_zero());
  CHECK(fusion_functor_image({1, 1}, C) == QMatrix::identity(2) + C);
}

TEST_CASE("verification routines") {
  auto h = verify_heisenberg();
  for (const auto& it : h.items) {
    INFO(it.name << " " << it.computed.dump());
    CHECK(it.pass);
  }
  CHECK(h.wall_time_ms < 30000);
  CHECK(verify_verlinde(10).pass());
  for (const char* t : {"A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    CAPTURE(t);
    auto rd = rootdata::build_root_data(t);
    auto r = verify_prop_func_and_pir(rd);
    for (const auto& it : r.items) {
      INFO(it.name);
      CHECK(it.pass);
    }
    CHECK(verify_A_selfduality(rd.coxeter_number).pass());
  }
  for (const char* t : {"A2", "A3", "D4"}) {
    auto rd = rootdata::build_root_data(t);
    auto tab = nc::build_graded_basis(preproj::presentation_of({rd, preproj::Mode::Pi0mu, preproj::rho_weight(rd)}));
    auto r = verify_prop_func_and_pir(rd, &tab);
    CHECK(r.pass());
    if (std::string(t) == "A2") {
      for (const auto& it : r.items)
        if (it.name == "per-degree dimensions of the image") CHECK(it.computed == nlohmann::json::parse("[2,2,2]"));
    }
  }
  auto s4 = verify_A_selfduality(4);
  CHECK(s4.inputs["structure"] == nlohmann::json::parse("[[1],[0,1],[1,0,1],[0,1],[1]]"));
  auto s3 = verify_A_selfduality(3);
  CHECK(s3.inputs["structure"] == nlohmann::json::parse("[[1],[0,1],[1]]"));
}
