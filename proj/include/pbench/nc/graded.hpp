#pragma once

#include <memory>
#include <vector>

#include "pbench/exact/sparse.hpp"
#include "pbench/nc/presentation.hpp"

namespace pbench::nc {

using QVec = std::vector<Rational>;
using QSparseVec = SparseVec<Rational>;

// Linear map between two blocks, stored column by column.
struct LinearMap {
  int rows = 0;
  int cols = 0;
  std::vector<QSparseVec> columns;

  QVec apply(const QVec& v) const;
  nlohmann::json to_json() const;
  static LinearMap from_json(const nlohmann::json& j);
};

// Element of one graded block A[degree]_{source,target}, in the block basis.
struct BlockElement {
  int degree = 0;
  int source = 0;
  int target = 0;
  QVec coords;

  bool is_zero() const;
};

struct GradedOptions {
  int max_degree = 64;
  // After termination is detected, build this many further degrees and
  // assert that they vanish as well.
  int verify_tail = 1;
};

class GradedBasisTable {
 public:
  const AlgebraPresentation& presentation() const { return *pres_; }
  int num_vertices() const { return pres_->num_vertices(); }
  int computed_degree() const { return computed_degree_; }
  bool terminated() const { return terminated_; }
  // Highest degree with a nonzero component.
  int top_degree() const { return top_degree_; }

  const std::vector<Path>& basis(int n, int s, int t) const;
  int dim(int n, int s, int t) const { return static_cast<int>(basis(n, s, t).size()); }
  long dim(int n) const;
  long total_dim() const;
  std::vector<long> hilbert_dims() const;  // degrees 0..computed_degree
  std::vector<std::vector<long>> dimension_matrix(int n) const;
  int basis_index(const Path& p, int degree) const;

  // Right multiplication by g: A[n]_{s, src g} -> A[n + deg g]_{s, tgt g}.
  const LinearMap& right_mult(int g, int n, int s) const;
  // Left multiplication by g: A[n]_{tgt g, t} -> A[n + deg g]_{src g, t}.
  const LinearMap& left_mult(int g, int n, int t) const;

  BlockElement zero(int n, int s, int t) const;
  BlockElement unit_vector(int n, int s, int t, int index) const;
  BlockElement idempotent(int v) const { return unit_vector(0, v, v, 0); }
  BlockElement normal_form(const Path& p) const;
  BlockElement times_generator(const BlockElement& x, int g) const;
  BlockElement generator_times(int g, const BlockElement& x) const;
  BlockElement times_word(BlockElement x, const Word& w) const;
  // Product of block elements; zero (possibly in an empty block) when the
  // endpoints do not compose is an error.
  BlockElement multiply(const BlockElement& x, const BlockElement& y) const;
  std::string element_to_string(const BlockElement& x) const;

  nlohmann::json to_json() const;
  static GradedBasisTable from_json(const AlgebraPresentation& p, const nlohmann::json& j);

 private:
  friend GradedBasisTable build_graded_basis(const AlgebraPresentation&, const GradedOptions&);
  struct Block {
    std::vector<Path> basis;
    std::vector<std::pair<int, int>> parent;  // (index of prefix in lower block, last generator)
  };
  size_t key(int s, int t) const { return static_cast<size_t>(s) * num_vertices() + t; }
  void build_left_maps();

  std::shared_ptr<const AlgebraPresentation> pres_;
  int computed_degree_ = 0;
  bool terminated_ = false;
  int top_degree_ = 0;
  std::vector<std::vector<Block>> blocks_;  // [degree][s * r + t]
  std::vector<std::vector<std::vector<LinearMap>>> right_;  // [degree][g][s]
  std::vector<std::vector<std::vector<LinearMap>>> left_;   // [degree][g][t]
};

// Degree-by-degree construction of the quotient of the path algebra by the
// two-sided ideal of a homogeneous presentation.
GradedBasisTable build_graded_basis(const AlgebraPresentation& p, const GradedOptions& opts = {});

}  // namespace pbench::nc
