#include "pbench/nc/oracle.hpp"

#include <map>
#include <stdexcept>

namespace pbench::nc {

OracleResult word_span_oracle(const AlgebraPresentation& p, int max_degree, const OracleOptions& opts) {
  p.validate();
  if (!p.is_homogeneous()) throw std::invalid_argument("word-span oracle needs a homogeneous presentation");
  const int r = p.num_vertices();
  // words[n][s][t]
  std::vector<std::vector<std::vector<std::vector<Word>>>> words(
      max_degree + 1, std::vector<std::vector<std::vector<Word>>>(r, std::vector<std::vector<Word>>(r)));
  OracleResult out;
  for (int v = 0; v < r; ++v) words[0][v][v].push_back({});
  out.words_enumerated = r;
  for (int n = 1; n <= max_degree; ++n)
    for (int g = 0; g < p.num_generators(); ++g) {
      const Generator& gen = p.generator(g);
      if (gen.degree > n) continue;
      for (int s = 0; s < r; ++s)
        for (const Word& w : words[n - gen.degree][s][gen.source]) {
          Word x = w;
          x.push_back(g);
          words[n][s][gen.target].push_back(std::move(x));
          if (++out.words_enumerated > opts.max_words)
            throw std::length_error("word-span oracle exceeded its word bound");
        }
    }

  out.block_dims.assign(max_degree + 1, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  out.dims.assign(max_degree + 1, 0);
  for (int n = 0; n <= max_degree; ++n)
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        const auto& ws = words[n][s][t];
        if (ws.empty()) continue;
        std::map<Word, int> index;
        for (size_t i = 0; i < ws.size(); ++i) index[ws[i]] = static_cast<int>(i);
        QSparse m(0, static_cast<int>(ws.size()));
        for (const auto& rel : p.relations()) {
          const int d = p.relation_top_degree(rel);
          if (d > n) continue;
          for (int a = 0; a + d <= n; ++a) {
            const int b = n - a - d;
            for (const Word& u : words[a][s][rel.source])
              for (const Word& v : words[b][rel.target][t]) {
                SparseVec<Rational> row;
                for (const auto& term : rel.terms) {
                  Word w = u;
                  w.insert(w.end(), term.path.letters.begin(), term.path.letters.end());
                  w.insert(w.end(), v.begin(), v.end());
                  row.emplace_back(index.at(w), term.coeff);
                }
                m.add_row(std::move(row));
              }
          }
        }
        TwoTierRank rk = two_tier_rank(m, opts.rank);
        if (!rk.confirmed_over_q) out.all_confirmed_over_q = false;
        if (rk.confirmed_over_q && rk.rank != rk.rank_mod_p)
          throw std::logic_error("rank over Q differs from rank mod p");
        out.block_dims[n][s][t] = static_cast<long>(ws.size()) - rk.rank;
        out.dims[n] += out.block_dims[n][s][t];
      }
  return out;
}

}  // namespace pbench::nc
