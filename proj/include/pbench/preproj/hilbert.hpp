#pragma once

#include <vector>

#include "pbench/exact/poly_matrix.hpp"
#include "pbench/nc/graded.hpp"
#include "pbench/report.hpp"
#include "pbench/rootdata.hpp"

namespace pbench::preproj {

using rootdata::RootData;

// 1 - C t + t^2 with C the adjacency matrix.
PolyMatrix quadratic_denominator(const RootData& rd);

// (1 + P t^h) / (1 - C t + t^2). The quotient is exact and of degree h - 2;
// throws std::logic_error otherwise.
PolyMatrix hilbert_pi0(const RootData& rd);
// (1 + t^2 + ... + t^{2(h-1)}) / (1 - C t + t^2), exact of degree 2h - 4.
PolyMatrix hilbert_pi0mu(const RootData& rd);
// (1 - t^{2h}) / ((1 - t^2)^r (1 - C t + t^2)) through t^max_degree.
PolyMatrix hilbert_pi_series(const RootData& rd, int max_degree);
// H_k(t) for the quotients N^k / N^{k+1} of the ideal generated by z, from
// sum_k H_k u^k = (H_0(t) - u t^h P H_0(u t)) / (1 - u t^2).
std::vector<PolyMatrix> hilbert_ideal_powers(const RootData& rd, int kmax);

// [n] evaluated at q = t^2
LaurentPoly bracket_t2(int n);

long dim_pi0_formula(const RootData& rd);    // h(h+1)r/6
long dim_pi0mu_formula(const RootData& rd);  // h^2(h+1)r/12

// Matrix Hilbert polynomial of an engine table: entry (s,t) counts paths s -> t.
PolyMatrix table_hilbert(const nc::GradedBasisTable& tab, int max_degree = -1);
// Scalar version for one-vertex algebras or for the sum of all entries.
LaurentPoly table_hilbert_scalar(const nc::GradedBasisTable& tab);

// JSON rendering of a matrix polynomial as a list of coefficient matrices.
nlohmann::json coefficients_json(const PolyMatrix& m, int max_degree);
// First exponent where two matrix polynomials differ, or -1.
int first_difference(const PolyMatrix& a, const PolyMatrix& b, int max_degree);

// Polynomial identities between the closed forms, without any engine run.
CheckResult verify_hilbert_identities(const RootData& rd);

}  // namespace pbench::preproj
