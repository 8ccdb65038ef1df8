#pragma once

#include <map>
#include <memory>
#include <vector>

#include "pbench/exact/dense.hpp"
#include "pbench/nc/graded.hpp"

namespace pbench::nc {

// The regular representation of a finite-dimensional algebra on a basis of
// paths. Column j of left[g] is g * b_j; column j of right[g] is b_j * g.
struct RegularRep {
  std::shared_ptr<const AlgebraPresentation> pres;
  int dimension = 0;
  std::vector<Path> basis;
  std::vector<int> degree;  // filtration degree of each basis path
  std::vector<LinearMap> left;
  std::vector<LinearMap> right;

  QVec zero() const { return QVec(dimension); }
  QVec basis_vector(int j) const;
  QVec unit() const;
  QVec idempotent(int v) const;
  int index_of(const Path& p) const;  // -1 if p is not a basis path

  QVec times_generator(const QVec& x, int g) const;
  QVec generator_times(int g, const QVec& x) const;
  QVec times_word(QVec x, const Word& w) const;
  QVec multiply(const QVec& x, const QVec& y) const;
  QVec normal_form(const Path& p) const;
  QVec evaluate(const std::vector<Term>& terms) const;
  QMatrix left_matrix(const QVec& x) const;
  QMatrix right_matrix(const QVec& x) const;
  std::string element_to_string(const QVec& x) const;
};

RegularRep regular_rep_from_table(const GradedBasisTable& tab);

// Number of (relation, basis vector) pairs on which rel * b or b * rel fails
// to vanish. Zero means the multiplication satisfies every relation.
long relation_violations(const RegularRep& rep);

}  // namespace pbench::nc
