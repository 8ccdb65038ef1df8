#pragma once

#include <vector>

#include "pbench/exact/sparse.hpp"
#include "pbench/nc/presentation.hpp"

namespace pbench::nc {

struct OracleOptions {
  long max_words = 1000000;
  RankOptions rank;
};

struct OracleResult {
  std::vector<long> dims;  // per degree
  std::vector<std::vector<std::vector<long>>> block_dims;  // [degree][s][t]
  long words_enumerated = 0;
  bool all_confirmed_over_q = true;
};

// Dimension of each graded piece as (#words) - rank{u rel v}, computed
// without any rewriting. Throws std::length_error past the word bound.
OracleResult word_span_oracle(const AlgebraPresentation& p, int max_degree, const OracleOptions& opts = {});

}  // namespace pbench::nc
