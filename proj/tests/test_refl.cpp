#include <doctest.h>

#include <set>

#include "pbench/refl/groups.hpp"
#include "pbench/refl/hecke.hpp"
#include "pbench/refl/verify.hpp"

using namespace pbench;
using namespace pbench::refl;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // first p, then q
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm power(const Perm& p, int e) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = static_cast<int>(i);
  for (int k = 0; k < e; ++k) r = compose(r, p);
  return r;
}

bool is_id(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Brute-force closure, kept separate from the library routine.
size_t closure_size(const std::vector<Perm>& gens) {
  std::set<Perm> seen{power(gens[0], 0)};
  std::vector<Perm> todo{power(gens[0], 0)};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

GroupPresentation coxeter_a(int n) {  // symmetric group S_{n+1}
  std::vector<std::string> gens, rels;
  for (int i = 0; i < n; ++i) gens.push_back("s" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    rels.push_back("s" + std::to_string(i) + "^2=1");
    for (int j = i + 1; j < n; ++j) {
      const std::string si = "s" + std::to_string(i), sj = "s" + std::to_string(j);
      const int m = (j == i + 1) ? 3 : 2;
      std::string w;
      for (int k = 0; k < m; ++k) w += si + " " + sj + " ";
      rels.push_back(w + "=1");
    }
  }
  return make_presentation("S" + std::to_string(n + 1), Family::Tetrahedral, "test", gens, rels, 0);
}

}  // namespace

TEST_CASE("catalog transcription") {
  const auto cat = group_catalog();
  CHECK(cat.size() == 22);
  int base = 0, maximal = 0, sub = 0;
  for (const auto& g : cat) {
    base += g.kind == "base";
    maximal += g.kind == "maximal";
    sub += g.kind == "subgroup";
  }
  CHECK(base == 3);
  CHECK(maximal == 3);
  CHECK(sub == 16);

  const auto& g4 = catalog_entry("G4");
  CHECK(g4.generators == std::vector<std::string>{"a", "b", "c", "zeta"});
  CHECK(g4.relation_text ==
        std::vector<std::string>{"a^2=zeta^-1", "b^3=zeta", "c^3=1", "a b c=1", "zeta central"});
  CHECK(g4.expected_order == 24);
  // a^2 zeta, b^3 zeta^-1, c^3, abc and three commutators
  CHECK(g4.relators.size() == 7);
  CHECK(g4.relators[0] == GroupWord{1, 1, 4});
  CHECK(g4.relators[1] == GroupWord{2, 2, 2, -4});

  const auto& ico = catalog_entry("icosahedral");
  CHECK(ico.relation_text == std::vector<std::string>{"a^2=1", "b^3=1", "c^5=1", "a b c=1"});
  CHECK(ico.expected_order == 60);

  const auto& g13 = catalog_entry("G13");
  CHECK(g13.expected_order == 96);
  bool has_f = false;
  for (const auto& t : g13.relation_text) has_f = has_f || t == "c^2 zeta=f";
  CHECK(has_f);
  // c^2 zeta f^-1
  const int c = 3, f = 4, z = 5;
  bool found = false;
  for (const auto& r : g13.relators) found = found || r == GroupWord{c, c, z, -f};
  CHECK(found);

  CHECK(catalog_entry("G7").generators == std::vector<std::string>{"a_*", "b_*", "c_*", "Z"});
  CHECK(catalog_entry("G19").expected_order == 3600);
  CHECK_THROWS_AS(catalog_entry("G23"), std::invalid_argument);

  for (const auto& g : cat)
    for (const auto& r : g.relators) CHECK(r == cyclic_reduce(r));
}

TEST_CASE("word helpers") {
  const std::vector<std::string> gens{"a", "b"};
  CHECK(parse_group_word(gens, "a^2 b^-1 b a^-1") == GroupWord{1});
  CHECK(parse_group_word(gens, "1").empty());
  CHECK(cyclic_reduce({-1, 2, 1}) == GroupWord{2});
  CHECK(inverse({1, -2}) == GroupWord{2, -1});
  CHECK_THROWS_AS(parse_group_word(gens, "c"), std::invalid_argument);
  CHECK_THROWS_AS(make_presentation("x", Family::Tetrahedral, "test", gens, {"a b"}, 0), std::invalid_argument);
}

TEST_CASE("coset enumeration on known groups") {
  auto cyclic = make_presentation("C3", Family::Tetrahedral, "test", {"a"}, {"a^3=1"}, 3);
  auto t = todd_coxeter(cyclic);
  CHECK(t.order() == 3);
  CHECK(relators_hold(cyclic, t));

  for (int n = 3; n <= 12; ++n) {
    auto d = make_presentation("D", Family::Tetrahedral, "test", {"r", "s"},
                               {"r^" + std::to_string(n) + "=1", "s^2=1", "s r s=r^-1"}, 2 * n);
    auto td = todd_coxeter(d);
    CHECK(td.order() == 2 * n);
    CHECK(relators_hold(d, td));
    // index of the rotation subgroup
    CHECK(todd_coxeter(d, {parse_group_word(d.generators, "r")}).order() == 2);
  }
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= (n + 1);
    auto s = coxeter_a(n);
    auto ts = todd_coxeter(s);
    CHECK(ts.order() == fact);
    CHECK(relators_hold(s, ts));
  }
  // trivial group hidden behind a presentation with coincidences
  auto triv = make_presentation("T", Family::Tetrahedral, "test", {"a", "b"},
                                {"a b a^-1=b^2", "b a b^-1=a^2"}, 1);
  CHECK(todd_coxeter(triv).order() == 1);

  auto free2 = make_presentation("F2", Family::Tetrahedral, "test", {"a", "b"}, {"a b=b a b"}, 0);
  CHECK_THROWS_AS(todd_coxeter(free2, {}, EnumerationOptions{.max_cosets = 500}), std::length_error);
}

TEST_CASE("base group orders against concrete permutations") {
  struct Case {
    std::string name;
    Perm a, b;
    int p;
  };
  // rotation groups as A4, S4, A5
  const std::vector<Case> cases{
      {"tetrahedral", {1, 0, 3, 2}, {1, 2, 0, 3}, 3},
      {"octahedral", {1, 0, 2, 3}, {0, 2, 3, 1}, 4},
      {"icosahedral", {1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}, 5},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.name);
    Perm ab = compose(cs.a, cs.b);
    Perm c = power(ab, 0);
    for (int k = 1; k < 60; ++k)
      if (is_id(compose(power(ab, k), power(ab, 1)))) {
        c = power(ab, k);
        break;
      }
    REQUIRE(is_id(power(cs.a, 2)));
    REQUIRE(is_id(power(cs.b, 3)));
    REQUIRE(is_id(power(c, cs.p)));
    REQUIRE(is_id(compose(ab, c)));
    const auto& g = catalog_entry(cs.name);
    const auto t = todd_coxeter(g);
    CHECK(static_cast<size_t>(t.order()) == closure_size({cs.a, cs.b}));
    CHECK(t.order() == g.expected_order);
    CHECK(relators_hold(g, t));
  }
}

TEST_CASE("catalog orders") {
  for (const auto& name : all_group_names()) {
    CAPTURE(name);
    const auto r = verify_group(catalog_entry(name));
    for (const auto& f : r.failures()) MESSAGE(f);
    CHECK(r.pass());
  }
}

TEST_CASE("maximal group is a central extension of order |G|^2") {
  const auto r = verify_group(catalog_entry("G7"));
  CHECK(r.pass());
  bool seen = false;
  for (const auto& it : r.items)
    if (it.name == "maximal order = |G|^2") {
      seen = true;
      CHECK(it.computed == 144);
    }
  CHECK(seen);
}

TEST_CASE("reflection generator orders") {
  const auto& g = catalog_entry("G6");
  const auto t = todd_coxeter(g);
  REQUIRE(g.reflections.size() == 2);
  CHECK(g.reflections[0].generator == "a");
  CHECK(g.reflections[0].order == 2);
  CHECK(permutation_order(t.permutation(parse_group_word(g.generators, "a"))) == 2);
  CHECK(permutation_order(t.permutation(parse_group_word(g.generators, "c"))) == 3);
  // zeta = b^-3 has order 4 in G6
  CHECK(permutation_order(t.permutation(parse_group_word(g.generators, "zeta"))) == 4);
}

TEST_CASE("hecke presentations") {
  const auto h = unipotent_hecke(Family::Tetrahedral, true);
  CHECK(h.leg_orders == std::vector<int>{3, 3, 2});
  CHECK(h.relation_text().back() == "Y1Y2Y3 = 1");
  CHECK(h.relation_text()[2] == "(Y3 - 1)(Y3 - 1) = 0");
  CHECK(family_leg_orders(Family::Octahedral) == std::vector<int>{4, 3, 2});
  CHECK(family_leg_orders(Family::Icosahedral) == std::vector<int>{5, 3, 2});

  std::vector<std::vector<HeckeParameter>> bad{{{}, {}, {}, {}}, {{}, {}, {}}, {{}, {}}};
  CHECK_THROWS_AS(hecke_presentation(Family::Tetrahedral, bad, true), std::invalid_argument);

  std::vector<std::vector<HeckeParameter>> roots;
  for (int d : family_leg_orders(Family::Tetrahedral)) {
    std::vector<HeckeParameter> row;
    for (int j = 0; j < d; ++j) row.push_back({Rational(1), make_rational(j, d)});
    roots.push_back(row);
  }
  const auto hr = hecke_presentation(Family::Tetrahedral, roots, false);
  CHECK(hr.relation_text().back() == "Y1Y2Y3 central");
  CHECK(std::abs(hr.params[0][1].value() - std::polar(1.0, 2 * 3.14159265358979323846 / 3)) < 1e-12);
  CHECK(hr.params[2][1].is_rational());
  CHECK(hr.params[2][1].rational_value() == -1);
  CHECK_THROWS_AS(hr.to_algebra(), std::domain_error);

  // Z = 1 with parameters +-1 on the order 2 leg
  const auto alg = hstar_presentation(Family::Tetrahedral);
  CHECK(alg.num_generators() == 3);
  CHECK(alg.relations().size() == 4);
}

TEST_CASE("H* dimension equals the group order") {
  CHECK(hstar_dimension(Family::Tetrahedral) == 12);
  CHECK(hstar_dimension(Family::Octahedral) == 24);
  CHECK(verify_hstar(Family::Tetrahedral).pass());
  CHECK(hstar_dimension(Family::Icosahedral) == 60);
}
