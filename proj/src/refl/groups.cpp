#include "pbench/refl/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pbench::refl {

std::string family_name(Family f) {
  switch (f) {
    case Family::Tetrahedral: return "tetrahedral";
    case Family::Octahedral: return "octahedral";
    case Family::Icosahedral: return "icosahedral";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "tetrahedral") return Family::Tetrahedral;
  if (s == "octahedral") return Family::Octahedral;
  if (s == "icosahedral") return Family::Icosahedral;
  throw std::invalid_argument("unknown family '" + s + "'");
}

int GroupPresentation::generator_index(const std::string& n) const {
  auto it = std::find(generators.begin(), generators.end(), n);
  if (it == generators.end()) throw std::invalid_argument("unknown generator '" + n + "' in " + name);
  return static_cast<int>(it - generators.begin());
}

nlohmann::json GroupPresentation::to_json() const {
  nlohmann::json refl = nlohmann::json::array();
  for (const auto& r : reflections) refl.push_back({{"generator", r.generator}, {"order", r.order}});
  return {{"group", name},           {"family", family_name(family)}, {"kind", kind},
          {"generators", generators}, {"relations", relation_text},   {"reflections", refl},
          {"expected_order", expected_order}, {"realization", realization}};
}

GroupWord free_reduce(GroupWord w) {
  GroupWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(std::move(w));
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return GroupWord(w.begin() + i, w.begin() + j);
}

GroupWord inverse(const GroupWord& w) {
  GroupWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

GroupWord parse_group_word(const std::vector<std::string>& gens, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  GroupWord w;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    int e = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      e = std::stoi(tok.substr(pos + 1));
    }
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    const int g = static_cast<int>(it - gens.begin()) + 1;
    for (int k = 0; k < std::abs(e); ++k) w.push_back(e > 0 ? g : -g);
  }
  return free_reduce(w);
}

GroupPresentation make_presentation(std::string name, Family family, std::string kind, std::vector<std::string> gens,
                                    std::vector<std::string> relations, long expected_order) {
  GroupPresentation g;
  g.name = std::move(name);
  g.family = family;
  g.kind = std::move(kind);
  g.generators = std::move(gens);
  g.relation_text = relations;
  g.expected_order = expected_order;
  for (const auto& rel : relations) {
    if (auto pos = rel.find(" central"); pos != std::string::npos) {
      const std::string z = rel.substr(0, pos);
      const int zi = g.generator_index(z) + 1;
      for (int k = 0; k < static_cast<int>(g.generators.size()); ++k)
        if (k + 1 != zi) g.relators.push_back({zi, k + 1, -zi, -(k + 1)});
      continue;
    }
    const auto eq = rel.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("relation without '=': " + rel);
    GroupWord lhs = parse_group_word(g.generators, rel.substr(0, eq));
    GroupWord rhs = parse_group_word(g.generators, rel.substr(eq + 1));
    lhs.insert(lhs.end(), rhs.rbegin(), rhs.rend());
    for (size_t k = lhs.size() - rhs.size(); k < lhs.size(); ++k) lhs[k] = -lhs[k];
    GroupWord r = cyclic_reduce(lhs);
    if (!r.empty()) g.relators.push_back(r);
    // g^p = 1 with a single generator marks a reflection class
    const GroupWord l = parse_group_word(g.generators, rel.substr(0, eq));
    if (rhs.empty() && !l.empty() && std::all_of(l.begin(), l.end(), [&](int x) { return x == l[0]; }) && l[0] > 0 &&
        l.size() >= 2)
      g.reflections.push_back({g.generators[l[0] - 1], static_cast<int>(l.size())});
  }
  return g;
}

namespace {

struct Entry {
  std::string name;
  Family family;
  std::string kind;
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  long order;
  std::vector<std::string> realization;
};

std::vector<Entry> catalog_entries() {
  using F = Family;
  const std::vector<std::string> abcz{"a", "b", "c", "zeta"};
  const std::vector<std::string> abcfz{"a", "b", "c", "f", "zeta"};
  auto maximal = [](const std::string& name, F fam, int p, long order) {
    return Entry{name, fam, "maximal", {"a_*", "b_*", "c_*", "Z"},
                 {"a_*^2=1", "b_*^3=1", "c_*^" + std::to_string(p) + "=1", "a_* b_* c_*=Z", "Z central"}, order,
                 {"a_*", "b_*", "c_*", "Z"}};
  };
  auto base = [](const std::string& name, F fam, int p, long order) {
    return Entry{name, fam, "base", {"a", "b", "c"}, {"a^2=1", "b^3=1", "c^" + std::to_string(p) + "=1", "a b c=1"},
                 order, {}};
  };
  auto sub = [&](const std::string& name, F fam, std::vector<std::string> rels, long order,
                 std::vector<std::string> real, bool with_f = false) {
    return Entry{name, fam, "subgroup", with_f ? abcfz : abcz, std::move(rels), order, std::move(real)};
  };
  return {
      base("tetrahedral", F::Tetrahedral, 3, 12),
      base("octahedral", F::Octahedral, 4, 24),
      base("icosahedral", F::Icosahedral, 5, 60),
      sub("G4", F::Tetrahedral, {"a^2=zeta^-1", "b^3=zeta", "c^3=1", "a b c=1", "zeta central"}, 24,
          {"a_* Z^-3", "b_* Z^2", "c_*", "Z^6"}),
      sub("G5", F::Tetrahedral, {"a^2=zeta^-1", "b^3=1", "c^3=1", "a b c=1", "zeta central"}, 72,
          {"a_* Z^-1", "b_*", "c_*", "Z^2"}),
      sub("G6", F::Tetrahedral, {"a^2=1", "b^3=zeta^-1", "c^3=1", "a b c=1", "zeta central"}, 48,
          {"a_*", "b_* Z^-1", "c_*", "Z^3"}),
      maximal("G7", F::Tetrahedral, 3, 144),
      sub("G8", F::Octahedral, {"a^2=zeta^-1", "b^3=zeta", "c^4=1", "a b c=1", "zeta central"}, 96,
          {"a_* Z^-3", "b_* Z^2", "c_*", "Z^6"}),
      sub("G9", F::Octahedral, {"a^2=1", "b^3=zeta^-1", "c^4=1", "a b c=1", "zeta central"}, 192,
          {"a_*", "b_* Z^-1", "c_*", "Z^3"}),
      sub("G10", F::Octahedral, {"a^2=zeta^-1", "b^3=1", "c^4=1", "a b c=1", "zeta central"}, 288,
          {"a_* Z^-1", "b_*", "c_*", "Z^2"}),
      maximal("G11", F::Octahedral, 4, 576),
      sub("G12", F::Octahedral, {"a^2=1", "b^3=zeta^-1", "c^4=zeta", "a b c=1", "zeta central"}, 48,
          {"a_*", "b_* Z^-4", "c_* Z^3", "Z^12"}),
      sub("G13", F::Octahedral, {"a^2=1", "b^3=zeta", "f^2=1", "c^2 zeta=f", "a b c=1", "zeta central"}, 96,
          {"a_*", "b_* Z^2", "c_* Z^-3", "c_*^2", "Z^6"}, true),
      sub("G14", F::Octahedral, {"a^2=1", "b^3=1", "c^4=zeta^-1", "a b c=1", "zeta central"}, 144,
          {"a_*", "b_*", "c_* Z^-1", "Z^4"}),
      sub("G15", F::Octahedral, {"a^2=1", "b^3=1", "f^2=1", "c^2 zeta=f", "a b c=1", "zeta central"}, 288,
          {"a_*", "b_*", "c_* Z^-1", "c_*^2", "Z^2"}, true),
      sub("G16", F::Icosahedral, {"a^2=zeta^-1", "b^3=zeta", "c^5=1", "a b c=1", "zeta central"}, 600,
          {"a_* Z^-3", "b_* Z^2", "c_*", "Z^6"}),
      sub("G17", F::Icosahedral, {"a^2=1", "b^3=zeta^-1", "c^5=1", "a b c=1", "zeta central"}, 1200,
          {"a_*", "b_* Z^-1", "c_*", "Z^3"}),
      sub("G18", F::Icosahedral, {"a^2=zeta^-1", "b^3=1", "c^5=1", "a b c=1", "zeta central"}, 1800,
          {"a_* Z^-1", "b_*", "c_*", "Z^2"}),
      maximal("G19", F::Icosahedral, 5, 3600),
      sub("G20", F::Icosahedral, {"a^2=zeta^-1", "b^3=1", "c^5=zeta^2", "a b c=1", "zeta central"}, 360,
          {"a_* Z^-5", "b_*", "c_* Z^4", "Z^10"}),
      sub("G21", F::Icosahedral, {"a^2=1", "b^3=1", "c^5=zeta^-1", "a b c=1", "zeta central"}, 720,
          {"a_*", "b_*", "c_* Z^-1", "Z^5"}),
      sub("G22", F::Icosahedral, {"a^2=1", "b^3=zeta", "c^5=zeta^-2", "a b c=1", "zeta central"}, 240,
          {"a_*", "b_* Z^5", "c_* Z^-6", "Z^15"}),
  };
}

}  // namespace

std::vector<GroupPresentation> group_catalog() {
  std::vector<GroupPresentation> out;
  for (auto& e : catalog_entries()) {
    auto g = make_presentation(e.name, e.family, e.kind, e.gens, e.rels, e.order);
    g.realization = e.realization;
    out.push_back(std::move(g));
  }
  return out;
}

const GroupPresentation& catalog_entry(const std::string& name) {
  static const std::vector<GroupPresentation> cat = group_catalog();
  for (const auto& g : cat)
    if (g.name == name) return g;
  throw std::invalid_argument("no group named '" + name + "' in the catalog");
}

std::string maximal_group(Family f) {
  switch (f) {
    case Family::Tetrahedral: return "G7";
    case Family::Octahedral: return "G11";
    case Family::Icosahedral: return "G19";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Coset enumeration

namespace {

class Enumerator {
 public:
  Enumerator(const GroupPresentation& g, const EnumerationOptions& opts) : ngen_(static_cast<int>(g.generators.size())), opts_(opts) {
    // relator conjugates indexed by their first column
    by_column_.resize(2 * ngen_);
    for (const auto& r : g.relators) {
      for (const GroupWord& w : {r, inverse(r)}) {
        std::vector<int> cols;
        for (int x : w) cols.push_back(column(x));
        for (size_t s = 0; s < cols.size(); ++s) {
          std::vector<int> rot(cols.begin() + s, cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + s);
          auto& bucket = by_column_[rot[0]];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(rot);
        }
      }
      std::vector<int> cols;
      for (int x : r) cols.push_back(column(x));
      relators_.push_back(cols);
    }
    new_coset();
  }

  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inv(int col) { return col ^ 1; }

  void add_subgroup_generator(const GroupWord& w) {
    std::vector<int> cols;
    for (int x : w) cols.push_back(column(x));
    scan_and_fill(0, cols);
    process_deductions();
  }

  CosetTable run() {
    for (int a = 0; a < static_cast<int>(table_.size()); ++a) {
      for (int x = 0; x < 2 * ngen_ && live(a); ++x) {
        if (table_[a][x] >= 0) continue;
        const int b = new_coset();
        table_[a][x] = b;
        table_[b][inv(x)] = a;
        deductions_.push_back({a, x});
        process_deductions();
      }
    }
    return compact();
  }

 private:
  int new_coset() {
    if (live_count_ >= opts_.max_cosets) throw std::length_error("coset table bound exceeded");
    table_.emplace_back(2 * ngen_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_count_;
    ++defined_;
    return static_cast<int>(table_.size()) - 1;
  }

  bool live(int c) const { return parent_[c] == c; }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    --live_count_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < 2 * ngen_; ++x) {
        const int d = table_[g][x];
        if (d < 0) continue;
        table_[d][inv(x)] = -1;
        const int mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inv(x)] >= 0) {
          merge(mu, table_[nu][inv(x)], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(x)] = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Scan a relator at coset a; record a deduction if exactly one gap remains.
  void scan(int a, const std::vector<int>& w) {
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
    if (i > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      table_[f][w[i]] = b;
      table_[b][inv(w[i])] = f;
      deductions_.push_back({f, w[i]});
    }
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    for (;;) {
      int f = a, b = a;
      int i = 0, j = static_cast<int>(w.size()) - 1;
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        deductions_.push_back({f, w[i]});
        return;
      }
      const int c = new_coset();
      table_[f][w[i]] = c;
      table_[c][inv(w[i])] = f;
      deductions_.push_back({f, w[i]});
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(a)) continue;
      for (const auto& w : by_column_[x]) {
        if (!live(a)) break;
        scan(a, w);
      }
      if (!live(a)) continue;
      const int b = table_[a][x];
      if (b < 0 || !live(b)) continue;
      for (const auto& w : by_column_[inv(x)]) {
        if (!live(b)) break;
        scan(b, w);
      }
    }
  }

  CosetTable compact() {
    std::vector<int> index(table_.size(), -1);
    int n = 0;
    for (size_t c = 0; c < table_.size(); ++c)
      if (live(static_cast<int>(c))) index[c] = n++;
    CosetTable t;
    t.num_generators = ngen_;
    t.cosets_defined = defined_;
    t.complete = true;
    for (size_t c = 0; c < table_.size(); ++c) {
      if (!live(static_cast<int>(c))) continue;
      std::vector<int> row(2 * ngen_);
      for (int x = 0; x < 2 * ngen_; ++x) {
        const int d = table_[c][x];
        if (d < 0) {
          t.complete = false;
          row[x] = -1;
        } else {
          row[x] = index[rep(d)];
        }
      }
      t.table.push_back(std::move(row));
    }
    return t;
  }

  int ngen_;
  EnumerationOptions opts_;
  std::vector<std::vector<std::vector<int>>> by_column_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
  long live_count_ = 0;
  long defined_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& g, const std::vector<GroupWord>& subgroup,
                        const EnumerationOptions& opts) {
  Enumerator e(g, opts);
  for (const auto& w : subgroup) e.add_subgroup_generator(w);
  return e.run();
}

int CosetTable::apply(int c, const GroupWord& w) const {
  for (int x : w) {
    c = table[c][x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1];
    if (c < 0) throw std::logic_error("incomplete coset table");
  }
  return c;
}

std::vector<int> CosetTable::permutation(const GroupWord& w) const {
  std::vector<int> p(table.size());
  for (size_t c = 0; c < table.size(); ++c) p[c] = apply(static_cast<int>(c), w);
  return p;
}

bool relators_hold(const GroupPresentation& g, const CosetTable& t) {
  if (!t.complete) return false;
  for (size_t c = 0; c < t.table.size(); ++c) {
    for (int x = 0; x < 2 * t.num_generators; ++x) {
      const int d = t.table[c][x];
      if (d < 0 || t.table[d][x ^ 1] != static_cast<int>(c)) return false;
    }
    for (const auto& r : g.relators)
      if (t.apply(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  }
  return true;
}

long permutation_order(const std::vector<int>& perm) {
  long order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

long generated_group_order(const std::vector<std::vector<int>>& gens, long bound) {
  if (gens.empty()) return 1;
  const size_t n = gens[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> q(n);
        for (size_t i = 0; i < n; ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) {
          if (static_cast<long>(seen.size()) > bound) throw std::length_error("group larger than the bound");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

}  // namespace pbench::refl
