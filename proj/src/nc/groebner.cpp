#include "pbench/nc/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace pbench::nc {

namespace {

// Terms are keyed by (weighted degree, word) so that std::map with
// std::greater visits them from the largest in deglex order.
using Key = std::pair<int, std::u16string>;
using TermMap = std::map<Key, Rational, std::greater<Key>>;

struct Elem {
  int src = 0;
  int tgt = 0;
  std::vector<std::pair<Key, Rational>> terms;  // descending, monic leading term once reduced
  int sugar = 0;
  const std::u16string& lead() const { return terms.front().first.second; }
  int lead_degree() const { return terms.front().first.first; }
};

struct PendingPair {
  int sugar;
  long order;
  int i, j, k;
  bool operator>(const PendingPair& o) const { return sugar != o.sugar ? sugar > o.sugar : order > o.order; }
};

class Completion {
 public:
  Completion(const AlgebraPresentation& p, const FilteredOptions& opts) : p_(p), opts_(opts) {
    for (const auto& g : p.generators()) gdeg_.push_back(g.degree);
    dead_.assign(p.num_vertices(), 0);
  }

  void run() {
    for (const auto& rel : p_.relations()) {
      Elem e;
      e.src = rel.source;
      e.tgt = rel.target;
      TermMap tm;
      for (const auto& t : rel.terms) tm[{p_.word_degree(t.path.letters), encode(t.path.letters)}] += t.coeff;
      for (auto& [k, c] : tm)
        if (sgn(c) != 0) e.terms.emplace_back(k, c);
      e.sugar = p_.relation_top_degree(rel);
      pending_.push_back(std::move(e));
    }
    while (!pending_.empty() || !pairs_.empty()) {
      if (!pending_.empty()) {
        Elem e = std::move(pending_.front());
        pending_.pop_front();
        if (auto r = reduce(std::move(e))) insert(std::move(*r));
        continue;
      }
      PendingPair pp = pairs_.top();
      pairs_.pop();
      if (!alive_[pp.i] || !alive_[pp.j]) continue;
      if (pp.sugar > opts_.max_sugar)
        throw std::runtime_error("completion did not terminate below degree " + std::to_string(opts_.max_sugar));
      if (auto r = reduce(s_polynomial(pp))) insert(std::move(*r));
    }
    tail_reduce();
  }

  int word_degree(const std::u16string& w) const {
    int d = 0;
    for (char16_t c : w) d += gdeg_[c - 1];
    return d;
  }

  static std::u16string encode(const Word& w) {
    std::u16string s;
    for (int g : w) s.push_back(static_cast<char16_t>(g + 1));
    return s;
  }
  static Word decode(const std::u16string& s) {
    Word w;
    for (char16_t c : s) w.push_back(static_cast<int>(c) - 1);
    return w;
  }

  bool irreducible_suffix(const std::u16string& w) const {
    for (const auto& [len, cnt] : lengths_) {
      if (cnt == 0 || len > w.size()) continue;
      if (lead_.count(w.substr(w.size() - len))) return false;
    }
    return true;
  }

  // Full reduction modulo the current basis, without normalization.
  std::vector<std::pair<Key, Rational>> reduce_raw(const Elem& f) {
    TermMap work;
    for (const auto& [k, c] : f.terms) work[k] += c;
    std::vector<std::pair<Key, Rational>> out;
    while (!work.empty()) {
      auto it = work.begin();
      Key k = it->first;
      Rational c = it->second;
      work.erase(it);
      if (sgn(c) == 0) continue;
      if (k.second.empty() && dead_[f.src]) continue;
      int idx;
      size_t pos;
      if (!find_divisor(k.second, idx, pos)) {
        out.emplace_back(std::move(k), std::move(c));
        continue;
      }
      if (++steps_ > opts_.max_steps) throw std::runtime_error("completion exceeded its reduction step budget");
      const Elem& g = gb_[idx];
      const std::u16string prefix = k.second.substr(0, pos);
      const std::u16string suffix = k.second.substr(pos + g.lead().size());
      const int outer = k.first - g.lead_degree();
      for (size_t t = 1; t < g.terms.size(); ++t) {
        Key nk{outer + g.terms[t].first.first, prefix + g.terms[t].first.second + suffix};
        auto [jt, inserted] = work.emplace(std::move(nk), Rational(0));
        jt->second -= c * g.terms[t].second;
        if (sgn(jt->second) == 0) work.erase(jt);
      }
    }
    return out;
  }

  // Fully reduced and monic; nullopt for zero.
  std::optional<Elem> reduce(const Elem& f) {
    Elem out;
    out.src = f.src;
    out.tgt = f.tgt;
    out.sugar = f.sugar;
    out.terms = reduce_raw(f);
    if (out.terms.empty()) return std::nullopt;
    Rational inv = 1 / out.terms.front().second;
    for (auto& [k, c] : out.terms) c *= inv;
    return out;
  }

  bool find_divisor(const std::u16string& w, int& idx, size_t& pos) const {
    for (const auto& [len, cnt] : lengths_) {
      if (cnt == 0 || len > w.size()) continue;
      if (len == 0) continue;
      for (size_t i = 0; i + len <= w.size(); ++i) {
        auto it = lead_.find(w.substr(i, len));
        if (it != lead_.end()) {
          idx = it->second;
          pos = i;
          return true;
        }
      }
    }
    return false;
  }

  void kill(int i) {
    alive_[i] = 0;
    lead_.erase(gb_[i].lead());
    --lengths_[gb_[i].lead().size()];
  }

  void insert(Elem e) {
    if (e.lead().empty()) {
      // the idempotent e_v lies in the ideal, hence so does every arrow at v
      if (!dead_[e.src]) {
        dead_[e.src] = 1;
        for (int g = 0; g < p_.num_generators(); ++g) {
          const Generator& gen = p_.generator(g);
          if (gen.source != e.src && gen.target != e.src) continue;
          Elem a;
          a.src = gen.source;
          a.tgt = gen.target;
          a.terms.emplace_back(Key{gen.degree, std::u16string(1, static_cast<char16_t>(g + 1))}, Rational(1));
          a.sugar = gen.degree;
          pending_.push_back(std::move(a));
        }
        for (size_t i = 0; i < gb_.size(); ++i)
          if (alive_[i]) {
            bool touches = false;
            for (const auto& t : gb_[i].terms) touches = touches || (t.first.second.empty() && gb_[i].src == e.src);
            if (touches) {
              kill(static_cast<int>(i));
              pending_.push_back(gb_[i]);
            }
          }
      }
      return;
    }
    for (size_t i = 0; i < gb_.size(); ++i)
      if (alive_[i] && gb_[i].lead().find(e.lead()) != std::u16string::npos) {
        kill(static_cast<int>(i));
        pending_.push_back(gb_[i]);
      }
    if (static_cast<long>(lead_.size()) >= opts_.max_basis_size)
      throw std::runtime_error("completion exceeded its basis size bound");
    const int n = static_cast<int>(gb_.size());
    gb_.push_back(std::move(e));
    alive_.push_back(1);
    lead_[gb_[n].lead()] = n;
    ++lengths_[gb_[n].lead().size()];
    for (int j = 0; j <= n; ++j) {
      if (!alive_[j]) continue;
      add_overlaps(n, j);
      if (j != n) add_overlaps(j, n);
    }
  }

  // Overlaps where a proper suffix of lead(i) equals a proper prefix of lead(j).
  void add_overlaps(int i, int j) {
    const std::u16string& a = gb_[i].lead();
    const std::u16string& b = gb_[j].lead();
    const size_t maxk = std::min(a.size(), b.size());
    for (size_t k = 1; k < maxk; ++k) {
      if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
      int s1 = gb_[i].sugar + word_degree(b.substr(k));
      int s2 = word_degree(a.substr(0, a.size() - k)) + gb_[j].sugar;
      pairs_.push({std::max(s1, s2), order_++, i, j, static_cast<int>(k)});
    }
  }

  Elem s_polynomial(const PendingPair& pp) const {
    const Elem& f = gb_[pp.i];
    const Elem& g = gb_[pp.j];
    const std::u16string right = g.lead().substr(pp.k);
    const std::u16string left = f.lead().substr(0, f.lead().size() - pp.k);
    const int dr = word_degree(right), dl = word_degree(left);
    Elem s;
    s.src = f.src;
    s.tgt = g.tgt;
    s.sugar = pp.sugar;
    TermMap tm;
    for (const auto& [k, c] : f.terms) tm[{k.first + dr, k.second + right}] += c;
    for (const auto& [k, c] : g.terms) tm[{k.first + dl, left + k.second}] -= c;
    for (auto& [k, c] : tm)
      if (sgn(c) != 0) s.terms.emplace_back(k, c);
    return s;
  }

  void tail_reduce() {
    for (size_t i = 0; i < gb_.size(); ++i) {
      if (!alive_[i]) continue;
      Elem tail = gb_[i];
      tail.terms.erase(tail.terms.begin());
      // every tail word is below the leading word, so element i never acts on it
      auto reduced = reduce_raw(tail);
      gb_[i].terms.resize(1);
      for (auto& t : reduced) gb_[i].terms.push_back(std::move(t));
    }
  }

  const AlgebraPresentation& p_;
  FilteredOptions opts_;
  std::vector<int> gdeg_;
  std::vector<Elem> gb_;
  std::vector<char> alive_;
  std::unordered_map<std::u16string, int> lead_;
  std::map<size_t, int> lengths_;
  std::vector<char> dead_;
  std::priority_queue<PendingPair, std::vector<PendingPair>, std::greater<PendingPair>> pairs_;
  std::deque<Elem> pending_;
  long steps_ = 0;
  long order_ = 0;

  friend FilteredResult build_filtered_basis(const AlgebraPresentation&, const FilteredOptions&);
};

}  // namespace

FilteredResult build_filtered_basis(const AlgebraPresentation& p, const FilteredOptions& opts) {
  p.validate();
  Completion comp(p, opts);
  comp.run();

  struct NormalWord {
    int src, tgt, deg;
    std::u16string w;
  };
  std::vector<NormalWord> words;
  std::deque<NormalWord> queue;
  for (int v = 0; v < p.num_vertices(); ++v)
    if (!comp.dead_[v]) queue.push_back({v, v, 0, {}});
  while (!queue.empty()) {
    NormalWord nw = std::move(queue.front());
    queue.pop_front();
    if (nw.deg > opts.max_normal_degree)
      throw std::runtime_error("normal words exceed degree " + std::to_string(opts.max_normal_degree) +
                               ": algebra appears infinite-dimensional");
    for (int g = 0; g < p.num_generators(); ++g) {
      const Generator& gen = p.generator(g);
      if (gen.source != nw.tgt) continue;
      std::u16string w2 = nw.w;
      w2.push_back(static_cast<char16_t>(g + 1));
      if (comp.irreducible_suffix(w2)) queue.push_back({nw.src, gen.target, nw.deg + gen.degree, std::move(w2)});
    }
    words.push_back(std::move(nw));
  }
  std::sort(words.begin(), words.end(), [](const NormalWord& a, const NormalWord& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.w.empty() && b.w.empty()) return a.src < b.src;
    return a.w < b.w;
  });

  FilteredResult res;
  res.total_dimension = static_cast<long>(words.size());
  RegularRep& rep = res.rep;
  rep.pres = std::make_shared<const AlgebraPresentation>(p);
  rep.dimension = static_cast<int>(words.size());
  std::unordered_map<std::u16string, int> index;
  std::vector<int> idem_index(p.num_vertices(), -1);
  for (int j = 0; j < rep.dimension; ++j) {
    const auto& nw = words[j];
    rep.basis.push_back(Path{nw.src, nw.tgt, Completion::decode(nw.w)});
    rep.degree.push_back(nw.deg);
    if (nw.w.empty())
      idem_index[nw.src] = j;
    else
      index[nw.w] = j;
    if (static_cast<int>(res.gr_dims.size()) <= nw.deg) res.gr_dims.resize(nw.deg + 1, 0);
    ++res.gr_dims[nw.deg];
  }
  auto nf = [&](int src, int tgt, const std::u16string& w) {
    Elem e;
    e.src = src;
    e.tgt = tgt;
    e.terms.emplace_back(Key{comp.word_degree(w), w}, Rational(1));
    QSparseVec col;
    for (auto& [k, c] : comp.reduce_raw(e)) {
      int j = k.second.empty() ? idem_index[src] : index.at(k.second);
      if (j < 0) throw std::logic_error("normal form left a dead idempotent");
      col.emplace_back(j, c);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
  };
  const int G = p.num_generators();
  rep.left.assign(G, LinearMap{rep.dimension, rep.dimension, std::vector<QSparseVec>(rep.dimension)});
  rep.right = rep.left;
  for (int j = 0; j < rep.dimension; ++j) {
    const auto& nw = words[j];
    for (int g = 0; g < G; ++g) {
      const Generator& gen = p.generator(g);
      const std::u16string letter(1, static_cast<char16_t>(g + 1));
      if (gen.source == nw.tgt) rep.right[g].columns[j] = nf(nw.src, gen.target, nw.w + letter);
      if (gen.target == nw.src) rep.left[g].columns[j] = nf(gen.source, nw.tgt, letter + nw.w);
    }
  }

  for (size_t i = 0; i < comp.gb_.size(); ++i)
    if (comp.alive_[i]) {
      ++res.groebner_size;
      res.groebner_leading_words.push_back(p.word_to_string(Completion::decode(comp.gb_[i].lead())));
    }

  if (opts.build_gr_table) {
    AlgebraPresentation grp(p.num_vertices());
    for (const auto& g : p.generators()) grp.add_generator(g.name, g.source, g.target, g.degree);
    for (int v = 0; v < p.num_vertices(); ++v)
      if (comp.dead_[v]) grp.add_relation({Term{Rational(1), grp.idempotent(v)}}, "dead");
    for (size_t i = 0; i < comp.gb_.size(); ++i) {
      if (!comp.alive_[i]) continue;
      const Elem& e = comp.gb_[i];
      std::vector<Term> top;
      for (const auto& [k, c] : e.terms)
        if (k.first == e.lead_degree()) {
          Path path = k.second.empty() ? grp.idempotent(e.src) : grp.path_of(Completion::decode(k.second));
          top.push_back({c, path});
        }
      grp.add_relation(std::move(top), "lead");
    }
    GradedOptions gopts;
    gopts.max_degree = static_cast<int>(res.gr_dims.size()) + 2 * p.max_generator_degree() + 2;
    res.gr = build_graded_basis(grp, gopts);
  }
  return res;
}

}  // namespace pbench::nc
