#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbench/nc/graded.hpp"
#include "pbench/nc/regular_rep.hpp"

namespace pbench::nc {

struct FilteredOptions {
  int max_sugar = 80;              // overlaps above this degree mean non-termination
  long max_basis_size = 50000;
  long max_steps = 5000000;        // reduction steps across the whole completion
  int max_normal_degree = 400;     // normal words beyond this degree mean infinite dimension
  bool build_gr_table = true;
};

struct FilteredResult {
  long total_dimension = 0;
  std::vector<long> gr_dims;     // normal words per degree
  RegularRep rep;
  std::optional<GradedBasisTable> gr;  // table of the associated graded algebra
  int groebner_size = 0;
  std::vector<std::string> groebner_leading_words;
};

// Noncommutative Buchberger completion of the ideal in the path algebra,
// deglex order, normal selection by sugar. Works for inhomogeneous relations
// (including idempotent terms) and yields a basis of normal words.
FilteredResult build_filtered_basis(const AlgebraPresentation& p, const FilteredOptions& opts = {});

}  // namespace pbench::nc
