#pragma once

#include <map>
#include <vector>

#include "pbench/exact/dense.hpp"
#include "pbench/exact/laurent.hpp"

namespace pbench::qfusion {

// Multiplicities over V_0, V_1, ...; index k is the multiplicity of V_k.
using FusionElement = std::vector<long>;

// sum of v^{weight} over the normal basis of degree n, weights read from the
// action of q^h (y -> +1, x -> -1, z -> 0). Laurent polynomial in v.
LaurentPoly graded_character(int n);
// chi_{V_k} = v^k + v^{k-2} + ... + v^{-k}
LaurentPoly simple_character(int k);
// Greedy decomposition into simple characters. Throws std::domain_error on a
// remainder that is not a nonnegative combination.
FusionElement decompose(const LaurentPoly& character);

// V_i (x) V_j in the fusion category at level l = h - 2.
FusionElement verlinde_product(int i, int j, int level);
// V_i (x) V_j for generic q.
FusionElement clebsch_gordan(int i, int j);
// Product of two fusion elements at the given level.
FusionElement fusion_multiply(const FusionElement& a, const FusionElement& b, int level);

// Second-kind Chebyshev recursion P_0 = I, P_1 = M, P_{j+1} = M P_j - P_{j-1}.
QMatrix tchebysheff(int j, const QMatrix& m);
// sum_k mult_k P_k(C)
QMatrix fusion_functor_image(const FusionElement& e, const QMatrix& c);

// The degree-n component of the quantum Heisenberg algebra in the fusion
// category: sum_{j <= s/2} V_{s-2j}, s = min(n, 2h-4-n), for 0 <= n <= 2h-4.
std::vector<FusionElement> algebra_A_structure(int h);

}  // namespace pbench::qfusion
