#pragma once

#include <optional>

#include "pbench/nc/graded.hpp"
#include "pbench/report.hpp"
#include "pbench/rootdata.hpp"

namespace pbench::qfusion {

// Normal form, commutation formulas, the U_q(sl2) action and the degree-wise
// characters of the quantum Heisenberg algebra.
CheckResult verify_heisenberg(int max_pj = 6, int max_commu = 8, int max_fe = 6, int max_char = 12,
                              uint64_t seed = 1);

// The Grothendieck-level image of A under V_j -> P_j(C) against the closed
// form of the Hilbert polynomial and, when given, an engine table of the
// central extension at mu = rho.
CheckResult verify_prop_func_and_pir(const rootdata::RootData& rd, const nc::GradedBasisTable* table = nullptr);

// A[i] and A[2h-4-i] carry the same multiplicities; the top degree is V_0.
CheckResult verify_A_selfduality(int h);

// Commutativity, associativity and unit of the Verlinde ring, levels 0..max_level.
CheckResult verify_verlinde(int max_level = 10);

}  // namespace pbench::qfusion
