#include "pbench/exact/sparse.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pbench {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

ModP ModP::operator+(ModP o) const {
  uint64_t s = v_ + o.v_;
  if (s >= modulus_) s -= modulus_;
  ModP r;
  r.v_ = s;
  return r;
}

ModP ModP::operator-(ModP o) const {
  ModP r;
  r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
  return r;
}

ModP ModP::operator*(ModP o) const {
  ModP r;
  r.v_ = mulmod(v_, o.v_, modulus_);
  return r;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  ModP r;
  r.v_ = powmod(v_, modulus_ - 2, modulus_);
  return r;
}

ModP ModP::operator/(ModP o) const { return *this * o.inverse(); }

ModP ModP::from_rational(const Rational& x) {
  mpz_class p(std::to_string(modulus_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the working prime");
  ModP n(std::stoull(num.get_str()));
  ModP d(std::stoull(den.get_str()));
  return n / d;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // these bases are deterministic for all 64-bit n
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t random_prime_60bit(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(1ULL << 59, (1ULL << 60) - 1);
  for (;;) {
    uint64_t c = dist(rng) | 1ULL;
    if (is_prime_u64(c)) return c;
  }
}

template <class F>
SparseVec<F> axpy(const SparseVec<F>& a, const F& c, const SparseVec<F>& b) {
  SparseVec<F> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      F v = c * b[j].second;
      if (!is_zero_scalar(v)) r.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      F v = a[i].second + c * b[j].second;
      if (!is_zero_scalar(v)) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

template <class F>
void SparseMatrix<F>::set(int i, int j, const F& v) {
  auto& row = row_data.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == j) {
    if (is_zero_scalar(v))
      row.erase(it);
    else
      it->second = v;
  } else if (!is_zero_scalar(v)) {
    row.insert(it, {j, v});
  }
}

template <class F>
void SparseMatrix<F>::add_row(SparseVec<F> row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> clean;
  for (auto& e : row) {
    if (!clean.empty() && clean.back().first == e.first)
      clean.back().second += e.second;
    else
      clean.push_back(e);
  }
  std::erase_if(clean, [](const auto& e) { return is_zero_scalar(e.second); });
  row_data.push_back(std::move(clean));
  ++rows;
}

template <class F>
size_t SparseMatrix<F>::nonzeros() const {
  size_t n = 0;
  for (const auto& r : row_data) n += r.size();
  return n;
}

namespace {

template <class F>
const F* find_entry(const SparseVec<F>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Gaussian elimination with a Markowitz-style pivot: shortest remaining row,
// then the sparsest column in it. With jordan set, pivot columns are also
// cleared from earlier pivot rows so the kernel can be read off directly.
template <class F>
RankKernel<F> eliminate(const SparseMatrix<F>& m, bool jordan) {
  std::vector<SparseVec<F>> rows = m.row_data;
  const int nr = static_cast<int>(rows.size());
  std::vector<int> colcount(m.cols, 0);
  std::vector<std::vector<int>> colidx(m.cols);
  std::vector<char> active(nr, 1);
  for (int r = 0; r < nr; ++r)
    for (const auto& [c, v] : rows[r]) {
      if (c < 0 || c >= m.cols) throw std::out_of_range("sparse column index");
      ++colcount[c];
      colidx[c].push_back(r);
    }
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  for (;;) {
    int best = -1;
    size_t best_len = 0;
    for (int r = 0; r < nr; ++r) {
      if (!active[r] || rows[r].empty()) continue;
      if (best < 0 || rows[r].size() < best_len) {
        best = r;
        best_len = rows[r].size();
        if (best_len == 1) break;
      }
    }
    if (best < 0) break;
    int pc = -1;
    for (const auto& [c, v] : rows[best])
      if (pc < 0 || colcount[c] < colcount[pc]) pc = c;
    F inv = F(1) / *find_entry(rows[best], pc);
    for (auto& e : rows[best]) e.second *= inv;
    active[best] = 0;
    for (const auto& [c, v] : rows[best]) --colcount[c];
    std::vector<int> targets = colidx[pc];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int r : targets) {
      if (r == best || (!active[r] && !jordan)) continue;
      const F* e = find_entry(rows[r], pc);
      if (!e) continue;
      F f = -*e;
      if (active[r])
        for (const auto& [c, v] : rows[r]) --colcount[c];
      rows[r] = axpy(rows[r], f, rows[best]);
      for (const auto& [c, v] : rows[r]) {
        if (active[r]) ++colcount[c];
        colidx[c].push_back(r);
      }
    }
    colidx[pc].clear();
    pivots.emplace_back(best, pc);
  }
  RankKernel<F> out;
  out.rank = static_cast<int>(pivots.size());
  if (!jordan) return out;
  std::vector<int> pivot_row_of_col(m.cols, -1);
  for (auto [r, c] : pivots) pivot_row_of_col[c] = r;
  for (int f = 0; f < m.cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<F> v(m.cols, F(0));
    v[f] = F(1);
    for (auto [r, c] : pivots)
      if (const F* e = find_entry(rows[r], f)) v[c] = -*e;
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace

template <class F>
RankKernel<F> rank_and_kernel(const SparseMatrix<F>& m) {
  return eliminate(m, true);
}

template <class F>
int sparse_rank(const SparseMatrix<F>& m) {
  return eliminate(m, false).rank;
}

PSparse reduce_mod_p(const QSparse& m) {
  PSparse r(0, m.cols);
  for (const auto& row : m.row_data) {
    SparseVec<ModP> pr;
    for (const auto& [c, v] : row) {
      ModP x = ModP::from_rational(v);
      if (!is_zero_scalar(x)) pr.emplace_back(c, x);
    }
    r.row_data.push_back(std::move(pr));
    ++r.rows;
  }
  return r;
}

TwoTierRank two_tier_rank(const QSparse& m, const RankOptions& opts) {
  TwoTierRank out;
  out.prime = random_prime_60bit(opts.prime_seed);
  uint64_t saved = ModP::modulus();
  ModP::set_modulus(out.prime);
  out.rank_mod_p = sparse_rank(reduce_mod_p(m));
  ModP::set_modulus(saved);
  out.rank = out.rank_mod_p;
  if (m.nonzeros() <= opts.confirm_threshold) {
    out.rank = sparse_rank(m);
    out.confirmed_over_q = true;
  }
  return out;
}

template <class F>
SparseVec<F> EchelonBasis<F>::reduce(SparseVec<F> row) const {
  SparseVec<F> r = row;
  for (const auto& [c, v] : row) {
    auto it = rows_.find(c);
    if (it == rows_.end()) continue;
    // stored rows vanish on other pivot columns, so the original coefficient is still current
    r = axpy(r, F(-v), it->second);
  }
  return r;
}

template <class F>
bool EchelonBasis<F>::insert(SparseVec<F> row) {
  SparseVec<F> r = reduce(std::move(row));
  if (r.empty()) return false;
  int p = r.front().first;
  F inv = F(1) / r.front().second;
  for (auto& e : r) e.second *= inv;
  for (auto& [pc, stored] : rows_) {
    const F* e = find_entry(stored, p);
    if (e) stored = axpy(stored, F(-*e), r);
  }
  rows_.emplace(p, std::move(r));
  return true;
}

template struct SparseMatrix<Rational>;
template struct SparseMatrix<ModP>;
template class EchelonBasis<Rational>;
template class EchelonBasis<ModP>;
template RankKernel<Rational> rank_and_kernel(const SparseMatrix<Rational>&);
template RankKernel<ModP> rank_and_kernel(const SparseMatrix<ModP>&);
template int sparse_rank(const SparseMatrix<Rational>&);
template int sparse_rank(const SparseMatrix<ModP>&);
template SparseVec<Rational> axpy(const SparseVec<Rational>&, const Rational&, const SparseVec<Rational>&);
template SparseVec<ModP> axpy(const SparseVec<ModP>&, const ModP&, const SparseVec<ModP>&);

}  // namespace pbench
