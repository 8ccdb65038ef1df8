#pragma once

#include <string>
#include <vector>

#include "pbench/nc/graded.hpp"
#include "pbench/nc/regular_rep.hpp"

namespace pbench::nc {

// Graded socle: elements killed on both sides by every generator.
std::vector<BlockElement> socle(const GradedBasisTable& tab);

// Socle of a finite-dimensional algebra: the two-sided annihilator of the
// Jacobson radical, which is the radical of the trace form in characteristic 0.
std::vector<QVec> socle(const RegularRep& rep);
std::vector<QVec> jacobson_radical(const RegularRep& rep);

struct FrobeniusReport {
  bool precondition_ok = false;
  std::string precondition_message;
  std::vector<long> hilbert;
  bool top_is_permutation = false;
  std::vector<int> sigma;  // A[d] e_p is supported on e_sigma(p)
  std::vector<bool> degree_pass;  // pairing A[i] x A[d-i] -> A[d] nondegenerate
  bool pass = false;
};

FrobeniusReport frobenius_check(const GradedBasisTable& tab, int top_degree);

// (tr L_{b_i b_j})
QMatrix trace_form(const RegularRep& rep);
int trace_form_rank(const RegularRep& rep);

struct FactoredCharPoly {
  std::vector<Rational> coeffs;  // monic det(T - L_x), ascending
  std::vector<std::pair<Rational, int>> roots;  // rational roots with multiplicity
  std::vector<Rational> cofactor;  // what is left after removing rational roots
  bool splits() const { return cofactor.size() == 1; }
  std::string to_string() const;
};

// Rational roots come from the candidates first, then from rationalizing
// numerical eigenvalues; every root is confirmed by exact division.
FactoredCharPoly charpoly_of_element(const RegularRep& rep, const QVec& x,
                                     const std::vector<Rational>& candidate_roots = {});
FactoredCharPoly factor_charpoly(std::vector<Rational> coeffs, const QMatrix* numeric_source,
                                 const std::vector<Rational>& candidate_roots);

// Expands prod (T - root)^mult.
std::vector<Rational> poly_from_roots(const std::vector<std::pair<Rational, int>>& roots);

}  // namespace pbench::nc
