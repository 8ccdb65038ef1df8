#include "pbench/preproj/presentations.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace pbench::preproj {

using nc::AlgebraPresentation;
using nc::Path;
using nc::Term;

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Pi0: return "Pi0";
    case Mode::Pi0mu: return "Pi0mu";
    case Mode::PiLambdaMu: return "PiLambdaMu";
    case Mode::PiTruncated: return "PiTruncated";
    case Mode::Bspherical: return "Bspherical";
    case Mode::BsphericalDeformed: return "BsphericalDeformed";
  }
  return "?";
}

std::string arrow_name(int e) { return "a" + std::to_string(e + 1); }
std::string star_name(int e) { return "a" + std::to_string(e + 1) + "*"; }
std::string z_loop_name(int v) { return "z" + std::to_string(v + 1); }
std::string x_loop_name(int j, int v) { return "x" + std::to_string(j + 1) + "@" + std::to_string(v + 1); }

bool is_regular(const RootData& rd, const Weight& mu) {
  if (static_cast<int>(mu.size()) != rd.rank) return false;
  for (const auto& a : rd.positive_roots)
    if (rd.pair_weight(a, mu) == 0) return false;
  return true;
}

bool spherical_condition(const RootData& rd, int node, const Weight& mu) {
  if (static_cast<int>(mu.size()) != rd.rank) return false;
  for (const auto& a : rd.positive_roots)
    if (a[node] > 0 && rd.pair_weight(a, mu) == 0) return false;
  return true;
}

std::vector<Rational> block_ratios(const RootData& rd, const Weight& lambda, const Weight& mu) {
  std::vector<Rational> c;
  for (const auto& a : rd.positive_roots) {
    Rational den = rd.pair_weight(a, mu);
    if (den == 0) throw std::invalid_argument("mu is not regular");
    c.push_back(rd.pair_weight(a, lambda) / den);
  }
  return c;
}

bool ratios_distinct(const std::vector<Rational>& c) {
  std::set<Rational> s(c.begin(), c.end());
  return s.size() == c.size();
}

namespace {

Weight padded(const Weight& w, int r, const char* what) {
  if (w.empty()) return Weight(r, Rational(0));
  if (static_cast<int>(w.size()) != r) throw std::invalid_argument(std::string(what) + " has the wrong length");
  return w;
}

void add_double_quiver(AlgebraPresentation& p, const RootData& rd) {
  for (size_t e = 0; e < rd.edges.size(); ++e) {
    p.add_generator(arrow_name(e), rd.edges[e].source, rd.edges[e].target, 1);
    p.add_generator(star_name(e), rd.edges[e].target, rd.edges[e].source, 1);
  }
}

// sum over arrows ending at i of a* a, minus sum over arrows leaving i of a a*
// (words read left to right).
std::vector<Term> commutator_at(const AlgebraPresentation& p, const RootData& rd, int i) {
  std::vector<Term> t;
  for (size_t e = 0; e < rd.edges.size(); ++e) {
    if (rd.edges[e].target == i) t.push_back({Rational(1), p.path({star_name(e), arrow_name(e)})});
    if (rd.edges[e].source == i) t.push_back({Rational(-1), p.path({arrow_name(e), star_name(e)})});
  }
  return t;
}

// [loop, g] = 0 for each arrow g, where `loop(v)` names the loop at v.
template <class LoopName>
void add_centrality(AlgebraPresentation& p, int num_arrows, LoopName loop, const std::string& label) {
  for (int g = 0; g < num_arrows; ++g) {
    const auto& gen = p.generator(g);
    p.add_relation({{Rational(1), p.path({loop(gen.source), gen.name})},
                    {Rational(-1), p.path({gen.name, loop(gen.target)})}},
                   label + "," + gen.name);
  }
}

AlgebraPresentation quiver_algebra(const PreprojSpec& s) {
  const RootData& rd = s.rd;
  const int r = rd.rank;
  AlgebraPresentation p(r);
  add_double_quiver(p, rd);
  const int num_arrows = p.num_generators();
  const Weight mu = padded(s.mu, r, "mu");
  const Weight lambda = padded(s.lambda, r, "lambda");

  switch (s.mode) {
    case Mode::Pi0:
      for (int i = 0; i < r; ++i) p.add_relation(commutator_at(p, rd, i), "vertex " + std::to_string(i + 1));
      break;
    case Mode::Pi0mu:
    case Mode::PiLambdaMu: {
      if (!is_regular(rd, mu)) throw std::invalid_argument("mu is not regular");
      if (s.mode == Mode::Pi0mu && !s.lambda.empty())
        for (const auto& l : lambda)
          if (l != 0) throw std::invalid_argument("Pi0mu takes no lambda");
      for (int i = 0; i < r; ++i) p.add_generator(z_loop_name(i), i, i, 2);
      for (int i = 0; i < r; ++i) {
        auto t = commutator_at(p, rd, i);
        if (mu[i] != 0) t.push_back({-mu[i], p.path({z_loop_name(i)})});
        if (s.mode == Mode::PiLambdaMu && lambda[i] != 0) t.push_back({-lambda[i], p.idempotent(i)});
        p.add_relation(std::move(t), "vertex " + std::to_string(i + 1));
      }
      add_centrality(p, num_arrows, z_loop_name, "z central");
      p.set_central_element("z");
      break;
    }
    case Mode::PiTruncated: {
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) p.add_generator(x_loop_name(j, i), i, i, 2);
      for (int i = 0; i < r; ++i) {
        auto t = commutator_at(p, rd, i);
        t.push_back({Rational(-1), p.path({x_loop_name(i, i)})});
        p.add_relation(std::move(t), "vertex " + std::to_string(i + 1));
      }
      for (int j = 0; j < r; ++j)
        add_centrality(p, num_arrows, [j](int v) { return x_loop_name(j, v); }, "x" + std::to_string(j + 1) + " central");
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          for (int k = j + 1; k < r; ++k)
            p.add_relation({{Rational(1), p.path({x_loop_name(j, i), x_loop_name(k, i)})},
                            {Rational(-1), p.path({x_loop_name(k, i), x_loop_name(j, i)})}},
                           "x commute");
      break;
    }
    default:
      throw std::logic_error("not a quiver mode");
  }
  p.validate();
  return p;
}

// x_i = lambda_i + mu_i z as a polynomial c0 + c1 z.
struct Linear {
  Rational c0, c1;
};

// Expands prod_s (U - l_s) where each l_s = c0 + c1 z, returning terms in
// the commuting letters U (generator u) and z (generator zg).
std::vector<Term> expand_product(const AlgebraPresentation& p, int u, int zg, const std::vector<Linear>& factors) {
  // polynomial in (U, z) as map from (a, b) -> coeff, monomial U^a z^b
  std::map<std::pair<int, int>, Rational> poly{{{0, 0}, Rational(1)}};
  for (const auto& f : factors) {
    std::map<std::pair<int, int>, Rational> next;
    for (const auto& [m, c] : poly) {
      next[{m.first + 1, m.second}] += c;
      if (f.c0 != 0) next[{m.first, m.second}] -= c * f.c0;
      if (f.c1 != 0) next[{m.first, m.second + 1}] -= c * f.c1;
    }
    poly = std::move(next);
  }
  std::vector<Term> t;
  for (const auto& [m, c] : poly) {
    if (c == 0) continue;
    nc::Word w(m.first, u);
    w.insert(w.end(), m.second, zg);
    t.push_back({c, p.path_of(w, 0)});
  }
  return t;
}

AlgebraPresentation spherical_algebra(const PreprojSpec& s) {
  const RootData& rd = s.rd;
  const NodalData nd = rootdata::build_nodal_data(rd);
  const int m = nd.num_legs;
  AlgebraPresentation p(1);
  for (int k = 0; k < m; ++k) p.add_generator("U" + std::to_string(k + 1), 0, 0, 2);
  const int zg = p.add_generator("z", 0, 0, 2);

  if (s.mode == Mode::Bspherical) {
    const Weight mu = padded(s.mu, rd.rank, "mu");
    const Weight lambda = padded(s.lambda, rd.rank, "lambda");
    if (!spherical_condition(rd, nd.node, mu)) throw std::invalid_argument("mu fails the nodal weight condition");
    auto x = [&](int i) { return Linear{lambda[i], mu[i]}; };
    for (int k = 0; k < m; ++k) {
      std::vector<Linear> factors;
      Linear acc{0, 0};
      for (int sidx = 0; sidx < nd.leg_lengths[k]; ++sidx) {
        if (sidx > 0) {
          Linear xi = x(nd.legs[k][sidx - 1]);
          acc = {acc.c0 + xi.c0, acc.c1 + xi.c1};
        }
        factors.push_back(acc);
      }
      p.add_relation(expand_product(p, k, zg, factors), "leg " + std::to_string(k + 1));
    }
    // sum U_k + x_p = 0
    std::vector<Term> sum;
    for (int k = 0; k < m; ++k) sum.push_back({Rational(1), p.path_of({k}, 0)});
    Linear xp = x(nd.node);
    if (xp.c1 != 0) sum.push_back({xp.c1, p.path_of({zg}, 0)});
    if (xp.c0 != 0) sum.push_back({xp.c0, p.idempotent(0)});
    p.add_relation(std::move(sum), "sum");
  } else {
    std::vector<std::vector<Rational>> params = s.leg_params;
    if (params.empty())
      for (int k = 0; k < m; ++k) params.emplace_back(nd.leg_lengths[k], Rational(0));
    if (static_cast<int>(params.size()) != m) throw std::invalid_argument("one parameter list per leg expected");
    for (int k = 0; k < m; ++k) {
      if (static_cast<int>(params[k].size()) != nd.leg_lengths[k])
        throw std::invalid_argument("leg " + std::to_string(k + 1) + " needs d_k parameters");
      std::vector<Linear> factors;
      for (const auto& l : params[k]) factors.push_back({l, 0});
      p.add_relation(expand_product(p, k, zg, factors), "leg " + std::to_string(k + 1));
    }
    std::vector<Term> sum;
    for (int k = 0; k < m; ++k) sum.push_back({Rational(1), p.path_of({k}, 0)});
    sum.push_back({Rational(-1), p.path_of({zg}, 0)});
    p.add_relation(std::move(sum), "sum");
  }
  for (int k = 0; k < m; ++k)
    p.add_relation({{Rational(1), p.path_of({zg, k}, 0)}, {Rational(-1), p.path_of({k, zg}, 0)}}, "z central");
  if (s.kill_z) p.add_relation({{Rational(1), p.path_of({zg}, 0)}}, "z = 0");
  p.set_central_element("z");
  p.validate();
  return p;
}

}  // namespace

AlgebraPresentation presentation_of(const PreprojSpec& s) {
  if (s.mode == Mode::Bspherical || s.mode == Mode::BsphericalDeformed) return spherical_algebra(s);
  return quiver_algebra(s);
}

std::vector<Path> z_loops(const AlgebraPresentation& p, int num_vertices) {
  std::vector<Path> out;
  for (int v = 0; v < num_vertices; ++v) out.push_back(p.path({z_loop_name(v)}));
  return out;
}

std::vector<Term> corner_element(const AlgebraPresentation& p, const RootData& rd, int node, const std::vector<int>& leg) {
  const int nb = leg.at(0);
  for (size_t e = 0; e < rd.edges.size(); ++e) {
    if (rd.edges[e].source == node && rd.edges[e].target == nb)
      return {{Rational(1), p.path({arrow_name(e), star_name(e)})}};
    if (rd.edges[e].target == node && rd.edges[e].source == nb)
      return {{Rational(-1), p.path({star_name(e), arrow_name(e)})}};
  }
  throw std::invalid_argument("leg does not start next to the node");
}

}  // namespace pbench::preproj
