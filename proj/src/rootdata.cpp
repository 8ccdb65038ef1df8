#include "pbench/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace pbench::rootdata {

int RootData::pairing_with_rho(const IntVec& root) const {
  int s = 0;
  for (int c : root) s += c;
  return s;
}

IntVec RootData::highest_root() const { return positive_roots.back(); }

long RootData::inner(const IntVec& a, const IntVec& b) const {
  long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += static_cast<long>(a[i]) * gram[i][j] * b[j];
  return s;
}

Rational RootData::pair_weight(const IntVec& root, const std::vector<Rational>& w) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    if (root[i] != 0) s += Rational(root[i]) * w[i];
  return s;
}

QMatrix RootData::adjacency_matrix() const {
  QMatrix m(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m(i, j) = adjacency[i][j];
  return m;
}

QMatrix RootData::permutation_matrix() const {
  QMatrix m(rank, rank);
  for (int i = 0; i < rank; ++i) m(i, dual_permutation[i]) = 1;
  return m;
}

std::pair<Family, int> parse_type_label(const std::string& label) {
  std::string s;
  for (char c : label)
    if (c != '_' && c != ' ') s += c;
  if (s.size() < 2) throw std::invalid_argument("invalid ADE label: " + label);
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("invalid ADE label: " + label);
  int n = std::stoi(digits);
  switch (f) {
    case 'A':
      if (n >= 2) return {Family::A, n};
      break;
    case 'D':
      if (n >= 4) return {Family::D, n};
      break;
    case 'E':
      if (n >= 6 && n <= 8) return {Family::E, n};
      break;
    default:
      break;
  }
  throw std::invalid_argument("invalid ADE label: " + label);
}

std::string canonical_label(Family f, int n) {
  const char c = f == Family::A ? 'A' : (f == Family::D ? 'D' : 'E');
  return std::string(1, c) + std::to_string(n);
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Family f, int n) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

// Weyl-reflection s_i on a vector in simple-root coordinates.
IntVec reflect(const IntVec& beta, int i, const IntMat& cartan) {
  int pairing = 0;
  for (size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * cartan[j][i];
  IntVec r = beta;
  r[i] -= pairing;
  return r;
}

int height(const IntVec& v) {
  int s = 0;
  for (int c : v) s += c;
  return s;
}

}  // namespace

RootData build_root_data(const std::string& type_label, const std::vector<int>& orientation_flips) {
  auto [family, n] = parse_type_label(type_label);
  RootData rd;
  rd.type_label = canonical_label(family, n);
  rd.family = family;
  rd.rank = n;
  auto edges = dynkin_edges(family, n);
  std::set<int> flips(orientation_flips.begin(), orientation_flips.end());
  for (int k : flips)
    if (k < 0 || k >= static_cast<int>(edges.size())) throw std::invalid_argument("edge index out of range");
  rd.adjacency.assign(n, IntVec(n, 0));
  for (size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    rd.adjacency[a][b] = rd.adjacency[b][a] = 1;
    if (flips.count(static_cast<int>(k)))
      rd.edges.push_back({b, a});
    else
      rd.edges.push_back({a, b});
  }
  rd.cartan.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd.cartan[i][j] = (i == j ? 2 : 0) - rd.adjacency[i][j];
  rd.gram = rd.cartan;

  // Positive roots: a positive root other than alpha_i is sent by s_i to a
  // positive root, and every positive root is reached from a simple one by
  // height-increasing reflections.
  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        IntVec g = reflect(beta, i, rd.cartan);
        if (height(g) > height(beta) && roots.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  rd.positive_roots.assign(roots.begin(), roots.end());
  std::stable_sort(rd.positive_roots.begin(), rd.positive_roots.end(),
                   [](const IntVec& a, const IntVec& b) { return height(a) < height(b); });
  rd.coxeter_number = 1 + height(rd.positive_roots.back());
  rd.rho.assign(n, 1);

  // Dual permutation: drive the dominant weight e_i to the antidominant
  // chamber, which lands on w0(e_i) = -e_{P(i)}. Weights in fundamental
  // coordinates; s_k subtracts beta_k times the k-th row of the Cartan matrix.
  rd.dual_permutation.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    IntVec beta(n, 0);
    beta[i] = 1;
    for (;;) {
      int k = 0;
      while (k < n && beta[k] <= 0) ++k;
      if (k == n) break;
      int c = beta[k];
      for (int j = 0; j < n; ++j) beta[j] -= c * rd.cartan[k][j];
    }
    int target = -1;
    for (int j = 0; j < n; ++j) {
      if (beta[j] == -1 && target < 0)
        target = j;
      else if (beta[j] != 0)
        target = -2;
    }
    if (target < 0) throw std::logic_error("antidominant image is not a negative fundamental weight");
    rd.dual_permutation[i] = target;
  }
  return rd;
}

NodalData build_nodal_data(const RootData& rd) {
  NodalData nd;
  const int n = rd.rank;
  if (rd.family == Family::A) {
    if (n % 2 == 0) throw std::invalid_argument("type " + rd.type_label + " has no nodal vertex");
    nd.node = n / 2;
  } else {
    nd.node = -1;
    for (int i = 0; i < n; ++i) {
      int deg = 0;
      for (int j = 0; j < n; ++j) deg += rd.adjacency[i][j];
      if (deg == 3) nd.node = i;
    }
    if (nd.node < 0) throw std::logic_error("no branch vertex found");
  }
  for (int start = 0; start < n; ++start) {
    if (rd.adjacency[nd.node][start] == 0) continue;
    IntVec leg{start};
    int prev = nd.node, cur = start;
    for (;;) {
      int nxt = -1;
      for (int j = 0; j < n; ++j)
        if (rd.adjacency[cur][j] && j != prev) nxt = j;
      if (nxt < 0) break;
      leg.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    nd.legs.push_back(leg);
  }
  std::stable_sort(nd.legs.begin(), nd.legs.end(), [](const IntVec& a, const IntVec& b) { return a.size() > b.size(); });
  nd.num_legs = static_cast<int>(nd.legs.size());
  for (const auto& leg : nd.legs) nd.leg_lengths.push_back(static_cast<int>(leg.size()) + 1);
  nd.q1 = rd.highest_root()[nd.node];
  nd.q2 = rd.coxeter_number / 2 - nd.q1 + 1;
  if (nd.q1 > nd.q2) throw std::logic_error("q1 exceeds q2");
  return nd;
}

}  // namespace pbench::rootdata
