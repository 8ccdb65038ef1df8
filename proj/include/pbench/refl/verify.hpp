#pragma once

#include <string>
#include <vector>

#include "pbench/refl/groups.hpp"
#include "pbench/refl/hecke.hpp"
#include "pbench/report.hpp"

namespace pbench::refl {

// Order by coset enumeration, relator triviality on the closed table,
// reflection generator orders, and for exceptional groups the realization
// inside the maximal group of the family.
CheckResult verify_group(const GroupPresentation& g, const EnumerationOptions& opts = {});
std::vector<std::string> all_group_names();

// Dimension of H* from the filtered engine against the group order.
CheckResult verify_hstar(Family f);

}  // namespace pbench::refl
