#pragma once

#include <string>
#include <vector>

#include "pbench/exact/dense.hpp"

namespace pbench::rootdata {

enum class Family { A, D, E };

struct Edge {
  int source;  // 0-based vertex
  int target;
};

using IntVec = std::vector<int>;
using IntMat = std::vector<std::vector<int>>;

// An ADE quiver together with its root system. Vertices are 0-based in code
// and printed 1-based. Numbering: A_n is the chain 1-2-...-n; D_n is the chain
// 1-...-(n-2) with n-1 and n attached to n-2; E_n has the chain 1-3-4-...-n
// with 2 attached to 4.
struct RootData {
  std::string type_label;
  Family family = Family::A;
  int rank = 0;
  std::vector<Edge> edges;
  IntMat cartan;
  IntMat adjacency;
  int coxeter_number = 0;
  IntVec dual_permutation;  // P(i)
  std::vector<IntVec> positive_roots;  // simple-root coordinates, sorted by height then lex
  IntVec rho;  // fundamental-weight coordinates, all ones
  IntMat gram;  // equals the Cartan matrix under (x_i, x_i) = 2

  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
  int pairing_with_rho(const IntVec& root) const;  // height
  IntVec highest_root() const;
  // (a, b) for vectors in simple-root coordinates
  long inner(const IntVec& a, const IntVec& b) const;
  // (root, w) for a weight w in fundamental-weight coordinates: sum_i root_i w_i
  Rational pair_weight(const IntVec& root, const std::vector<Rational>& w) const;
  QMatrix adjacency_matrix() const;
  QMatrix permutation_matrix() const;
};

// Parses labels such as "A3", "D5", "E6", "A_3".
std::pair<Family, int> parse_type_label(const std::string& label);
std::string canonical_label(Family f, int n);

// Builds the quiver with every edge oriented from the lower to the higher
// vertex index; orientation_flips lists edge indices to reverse.
RootData build_root_data(const std::string& type_label, const std::vector<int>& orientation_flips = {});

struct NodalData {
  int node = 0;
  int num_legs = 0;
  IntVec leg_lengths;  // d_k; leg k is of type A_{d_k - 1}
  std::vector<IntVec> legs;  // vertices of each leg, starting next to the node
  int q1 = 0;
  int q2 = 0;
  int group_order() const { return q1 * q2; }
};

// Throws std::invalid_argument for A_{2n}, which has no nodal vertex.
NodalData build_nodal_data(const RootData& rd);

}  // namespace pbench::rootdata
