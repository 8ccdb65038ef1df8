#include "pbench/nc/graded.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pbench::nc {

QVec LinearMap::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("linear map applied to a vector of wrong size");
  QVec out(rows);
  for (int j = 0; j < cols; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (const auto& [i, c] : columns[j]) out[i] += c * v[j];
  }
  return out;
}

nlohmann::json LinearMap::to_json() const {
  nlohmann::json cj = nlohmann::json::array();
  for (const auto& col : columns) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [i, c] : col) entries.push_back({i, rational_to_json(c)});
    cj.push_back(entries);
  }
  return {{"rows", rows}, {"cols", cols}, {"columns", cj}};
}

LinearMap LinearMap::from_json(const nlohmann::json& j) {
  LinearMap m;
  m.rows = j.at("rows").get<int>();
  m.cols = j.at("cols").get<int>();
  for (const auto& col : j.at("columns")) {
    QSparseVec v;
    for (const auto& e : col) v.emplace_back(e.at(0).get<int>(), rational_from_json(e.at(1)));
    m.columns.push_back(std::move(v));
  }
  if (static_cast<int>(m.columns.size()) != m.cols) throw std::invalid_argument("linear map column count mismatch");
  return m;
}

bool BlockElement::is_zero() const {
  for (const auto& c : coords)
    if (sgn(c) != 0) return false;
  return true;
}

namespace {
const std::vector<Path> kEmptyBasis;
}

const std::vector<Path>& GradedBasisTable::basis(int n, int s, int t) const {
  if (n < 0 || n > computed_degree_) {
    if (n > computed_degree_ && !terminated_)
      throw std::out_of_range("degree " + std::to_string(n) + " beyond the truncation bound");
    return kEmptyBasis;
  }
  return blocks_[n][key(s, t)].basis;
}

long GradedBasisTable::dim(int n) const {
  if (n < 0 || n > computed_degree_) return 0;
  long d = 0;
  for (const auto& b : blocks_[n]) d += static_cast<long>(b.basis.size());
  return d;
}

long GradedBasisTable::total_dim() const {
  long d = 0;
  for (int n = 0; n <= computed_degree_; ++n) d += dim(n);
  return d;
}

std::vector<long> GradedBasisTable::hilbert_dims() const {
  std::vector<long> h;
  for (int n = 0; n <= computed_degree_; ++n) h.push_back(dim(n));
  return h;
}

std::vector<std::vector<long>> GradedBasisTable::dimension_matrix(int n) const {
  int r = num_vertices();
  std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) m[s][t] = dim(n, s, t);
  return m;
}

int GradedBasisTable::basis_index(const Path& p, int degree) const {
  const auto& b = basis(degree, p.source, p.target);
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] == p) return static_cast<int>(i);
  return -1;
}

const LinearMap& GradedBasisTable::right_mult(int g, int n, int s) const {
  const Generator& gen = pres_->generator(g);
  if (n >= 0 && n + gen.degree <= computed_degree_) return right_[n][g][s];
  thread_local LinearMap zero_map;
  if (!terminated_ && n + gen.degree > computed_degree_)
    throw std::out_of_range("product lands beyond the truncation bound");
  zero_map.rows = 0;
  zero_map.cols = dim(n, s, gen.source);
  zero_map.columns.assign(zero_map.cols, {});
  return zero_map;
}

const LinearMap& GradedBasisTable::left_mult(int g, int n, int t) const {
  const Generator& gen = pres_->generator(g);
  if (n >= 0 && n + gen.degree <= computed_degree_) return left_[n][g][t];
  thread_local LinearMap zero_map;
  if (!terminated_ && n + gen.degree > computed_degree_)
    throw std::out_of_range("product lands beyond the truncation bound");
  zero_map.rows = 0;
  zero_map.cols = dim(n, gen.target, t);
  zero_map.columns.assign(zero_map.cols, {});
  return zero_map;
}

BlockElement GradedBasisTable::zero(int n, int s, int t) const {
  return BlockElement{n, s, t, QVec(dim(n, s, t))};
}

BlockElement GradedBasisTable::unit_vector(int n, int s, int t, int index) const {
  BlockElement e = zero(n, s, t);
  if (index < 0 || index >= static_cast<int>(e.coords.size())) throw std::out_of_range("basis index");
  e.coords[index] = 1;
  return e;
}

BlockElement GradedBasisTable::times_generator(const BlockElement& x, int g) const {
  const Generator& gen = pres_->generator(g);
  if (x.target != gen.source) throw std::invalid_argument("element and generator do not compose");
  const LinearMap& m = right_mult(g, x.degree, x.source);
  BlockElement r{x.degree + gen.degree, x.source, gen.target, m.apply(x.coords)};
  if (r.coords.empty()) r.coords.assign(dim(r.degree, r.source, r.target), Rational(0));
  return r;
}

BlockElement GradedBasisTable::generator_times(int g, const BlockElement& x) const {
  const Generator& gen = pres_->generator(g);
  if (x.source != gen.target) throw std::invalid_argument("generator and element do not compose");
  const LinearMap& m = left_mult(g, x.degree, x.target);
  BlockElement r{x.degree + gen.degree, gen.source, x.target, m.apply(x.coords)};
  if (r.coords.empty()) r.coords.assign(dim(r.degree, r.source, r.target), Rational(0));
  return r;
}

BlockElement GradedBasisTable::times_word(BlockElement x, const Word& w) const {
  for (int g : w) x = times_generator(x, g);
  return x;
}

BlockElement GradedBasisTable::normal_form(const Path& p) const {
  if (dim(0, p.source, p.source) == 0) {
    int deg = pres_->word_degree(p.letters);
    return zero(deg, p.source, p.target);
  }
  return times_word(idempotent(p.source), p.letters);
}

BlockElement GradedBasisTable::multiply(const BlockElement& x, const BlockElement& y) const {
  if (x.target != y.source) throw std::invalid_argument("elements do not compose");
  BlockElement r = zero(x.degree + y.degree, x.source, y.target);
  const auto& yb = basis(y.degree, y.source, y.target);
  for (size_t j = 0; j < y.coords.size(); ++j) {
    if (sgn(y.coords[j]) == 0) continue;
    BlockElement part = times_word(x, yb[j].letters);
    for (size_t i = 0; i < part.coords.size(); ++i) r.coords[i] += y.coords[j] * part.coords[i];
  }
  return r;
}

std::string GradedBasisTable::element_to_string(const BlockElement& x) const {
  std::ostringstream os;
  const auto& b = basis(x.degree, x.source, x.target);
  bool first = true;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (sgn(x.coords[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x.coords[i].get_str() << ") " << pres_->path_to_string(b[i]);
  }
  return first ? "0" : os.str();
}

void GradedBasisTable::build_left_maps() {
  const int r = num_vertices();
  const int G = pres_->num_generators();
  left_.assign(computed_degree_ + 1, std::vector<std::vector<LinearMap>>(G, std::vector<LinearMap>(r)));
  for (int n = 0; n <= computed_degree_; ++n)
    for (int g = 0; g < G; ++g) {
      const Generator& gen = pres_->generator(g);
      if (n + gen.degree > computed_degree_) continue;
      for (int t = 0; t < r; ++t) {
        LinearMap& m = left_[n][g][t];
        const Block& blk = blocks_[n][key(gen.target, t)];
        m.cols = static_cast<int>(blk.basis.size());
        m.rows = dim(n + gen.degree, gen.source, t);
        m.columns.assign(m.cols, {});
        for (int j = 0; j < m.cols; ++j) {
          QVec image;
          if (n == 0) {
            image = normal_form(pres_->path_of({g})).coords;
          } else {
            auto [pi, h] = blk.parent[j];
            const int hd = pres_->generator(h).degree;
            const LinearMap& inner = left_[n - hd][g][pres_->generator(h).source];
            QVec u(inner.rows);
            for (const auto& [i, c] : inner.columns[pi]) u[i] = c;
            image = right_mult(h, n - hd + gen.degree, gen.source).apply(u);
          }
          for (size_t i = 0; i < image.size(); ++i)
            if (sgn(image[i]) != 0) m.columns[j].emplace_back(static_cast<int>(i), image[i]);
        }
      }
    }
}

GradedBasisTable build_graded_basis(const AlgebraPresentation& p, const GradedOptions& opts) {
  p.validate();
  if (!p.is_homogeneous()) throw std::invalid_argument("graded engine needs a homogeneous presentation");
  GradedBasisTable tab;
  tab.pres_ = std::make_shared<const AlgebraPresentation>(p);
  const int r = p.num_vertices();
  const int G = p.num_generators();
  const int D = p.max_generator_degree();
  using Block = GradedBasisTable::Block;

  auto alloc_right = [&](int n) {
    std::vector<std::vector<LinearMap>> maps(G, std::vector<LinearMap>(r));
    for (int g = 0; g < G; ++g)
      for (int s = 0; s < r; ++s) {
        maps[g][s].cols = static_cast<int>(tab.blocks_[n][tab.key(s, p.generator(g).source)].basis.size());
        maps[g][s].columns.assign(maps[g][s].cols, {});
      }
    tab.right_.push_back(std::move(maps));
  };

  // degree 0: the idempotents, unless a degree-0 relation kills one
  tab.blocks_.emplace_back(static_cast<size_t>(r) * r);
  for (int v = 0; v < r; ++v) {
    bool killed = false;
    for (const auto& rel : p.relations())
      if (rel.source == v && rel.target == v && p.relation_top_degree(rel) == 0) killed = true;
    if (!killed) {
      tab.blocks_[0][tab.key(v, v)].basis.push_back(p.idempotent(v));
      tab.blocks_[0][tab.key(v, v)].parent.emplace_back(-1, -1);
    }
  }
  alloc_right(0);
  tab.computed_degree_ = 0;
  tab.top_degree_ = 0;
  int zero_run = 0;

  for (int n = 1; n <= opts.max_degree; ++n) {
    tab.blocks_.emplace_back(static_cast<size_t>(r) * r);
    tab.computed_degree_ = n;
    long total = 0;
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        struct Col {
          int prev_degree, prev_index, gen;
          Word word;
        };
        std::vector<Col> cols;
        for (int g = 0; g < G; ++g) {
          const Generator& gen = p.generator(g);
          if (gen.target != t || gen.degree > n) continue;
          const int m = n - gen.degree;
          const auto& prev = tab.blocks_[m][tab.key(s, gen.source)].basis;
          for (size_t b = 0; b < prev.size(); ++b) {
            Word w = prev[b].letters;
            w.push_back(g);
            cols.push_back({m, static_cast<int>(b), g, std::move(w)});
          }
        }
        // largest word first, so the pivot of a row is its leading word
        std::sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) { return a.word > b.word; });
        std::map<std::pair<int, int>, int> col_of;  // (gen, prev index) -> column
        for (size_t c = 0; c < cols.size(); ++c) col_of[{cols[c].gen, cols[c].prev_index}] = static_cast<int>(c);

        EchelonBasis<Rational> eb(static_cast<int>(cols.size()));
        for (const auto& rel : p.relations()) {
          if (rel.target != t) continue;
          const int d = p.relation_top_degree(rel);
          if (d == 0 || d > n) continue;
          const int m = n - d;
          const int cnt = tab.dim(m, s, rel.source);
          for (int c = 0; c < cnt; ++c) {
            std::map<int, Rational> row;
            BlockElement unit = tab.unit_vector(m, s, rel.source, c);
            for (const auto& term : rel.terms) {
              const Word& w = term.path.letters;
              Word prefix(w.begin(), w.end() - 1);
              BlockElement v = tab.times_word(unit, prefix);
              const int last = w.back();
              for (size_t b = 0; b < v.coords.size(); ++b) {
                if (sgn(v.coords[b]) == 0) continue;
                row[col_of.at({last, static_cast<int>(b)})] += term.coeff * v.coords[b];
              }
            }
            QSparseVec sv;
            for (auto& [col, val] : row)
              if (sgn(val) != 0) sv.emplace_back(col, val);
            eb.insert(std::move(sv));
          }
        }

        Block& blk = tab.blocks_[n][tab.key(s, t)];
        std::vector<int> index_of_col(cols.size(), -1);
        for (int c = static_cast<int>(cols.size()) - 1; c >= 0; --c) {
          if (eb.is_pivot(c)) continue;
          index_of_col[c] = static_cast<int>(blk.basis.size());
          blk.basis.push_back(Path{s, t, cols[c].word});
          blk.parent.emplace_back(cols[c].prev_index, cols[c].gen);
        }
        const int dim_here = static_cast<int>(blk.basis.size());
        total += dim_here;
        for (size_t c = 0; c < cols.size(); ++c) {
          LinearMap& m = tab.right_[cols[c].prev_degree][cols[c].gen][s];
          m.rows = dim_here;
          QSparseVec image;
          if (index_of_col[c] >= 0) {
            image.emplace_back(index_of_col[c], Rational(1));
          } else {
            for (const auto& [oc, val] : eb.pivot_row(static_cast<int>(c)))
              if (oc != static_cast<int>(c)) image.emplace_back(index_of_col[oc], -val);
            std::sort(image.begin(), image.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          }
          m.columns[cols[c].prev_index] = std::move(image);
        }
      }
    // maps into degree n from blocks that had no columns still need their row count
    for (int g = 0; g < G; ++g) {
      const int m = n - p.generator(g).degree;
      if (m < 0) continue;
      for (int s = 0; s < r; ++s) tab.right_[m][g][s].rows = tab.dim(n, s, p.generator(g).target);
    }
    alloc_right(n);
    if (total == 0) {
      ++zero_run;
    } else {
      if (zero_run >= D) throw std::logic_error("nonzero component after the termination window");
      zero_run = 0;
      tab.top_degree_ = n;
    }
    if (zero_run >= D) tab.terminated_ = true;
    if (zero_run >= D + opts.verify_tail) break;
  }
  tab.build_left_maps();
  return tab;
}

nlohmann::json GradedBasisTable::to_json() const {
  nlohmann::json j;
  j["computed_degree"] = computed_degree_;
  j["terminated"] = terminated_;
  j["top_degree"] = top_degree_;
  nlohmann::json blocks = nlohmann::json::array();
  for (int n = 0; n <= computed_degree_; ++n) {
    nlohmann::json deg = nlohmann::json::array();
    for (const auto& b : blocks_[n]) {
      nlohmann::json words = nlohmann::json::array();
      for (size_t i = 0; i < b.basis.size(); ++i)
        words.push_back({b.basis[i].letters, b.parent[i].first, b.parent[i].second});
      deg.push_back(words);
    }
    blocks.push_back(deg);
  }
  j["blocks"] = blocks;
  nlohmann::json right = nlohmann::json::array();
  for (int n = 0; n <= computed_degree_; ++n) {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& per_g : right_[n]) {
      nlohmann::json ss = nlohmann::json::array();
      for (const auto& m : per_g) ss.push_back(m.to_json());
      gs.push_back(ss);
    }
    right.push_back(gs);
  }
  j["right"] = right;
  return j;
}

GradedBasisTable GradedBasisTable::from_json(const AlgebraPresentation& p, const nlohmann::json& j) {
  GradedBasisTable tab;
  tab.pres_ = std::make_shared<const AlgebraPresentation>(p);
  const int r = p.num_vertices();
  tab.computed_degree_ = j.at("computed_degree").get<int>();
  tab.terminated_ = j.at("terminated").get<bool>();
  tab.top_degree_ = j.at("top_degree").get<int>();
  for (const auto& deg : j.at("blocks")) {
    std::vector<Block> blocks(static_cast<size_t>(r) * r);
    if (deg.size() != blocks.size()) throw std::invalid_argument("cached table has the wrong vertex count");
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t)
        for (const auto& w : deg[tab.key(s, t)]) {
          blocks[tab.key(s, t)].basis.push_back(Path{s, t, w.at(0).get<Word>()});
          blocks[tab.key(s, t)].parent.emplace_back(w.at(1).get<int>(), w.at(2).get<int>());
        }
    tab.blocks_.push_back(std::move(blocks));
  }
  for (const auto& gs : j.at("right")) {
    std::vector<std::vector<LinearMap>> per_g;
    for (const auto& ss : gs) {
      std::vector<LinearMap> per_s;
      for (const auto& m : ss) per_s.push_back(LinearMap::from_json(m));
      per_g.push_back(std::move(per_s));
    }
    tab.right_.push_back(std::move(per_g));
  }
  if (static_cast<int>(tab.blocks_.size()) != tab.computed_degree_ + 1 ||
      static_cast<int>(tab.right_.size()) != tab.computed_degree_ + 1)
    throw std::invalid_argument("cached table is truncated");
  tab.build_left_maps();
  return tab;
}

}  // namespace pbench::nc
