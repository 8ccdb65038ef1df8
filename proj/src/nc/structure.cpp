#include "pbench/nc/structure.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pbench::nc {

namespace {

std::vector<QVec> kernel_of_stack(const std::vector<QMatrix>& maps, int cols) {
  QSparse m(0, cols);
  for (const auto& a : maps)
    for (int i = 0; i < a.rows(); ++i) {
      SparseVec<Rational> row;
      for (int j = 0; j < cols; ++j)
        if (sgn(a(i, j)) != 0) row.emplace_back(j, a(i, j));
      if (!row.empty()) m.add_row(std::move(row));
    }
  return rank_and_kernel(m).kernel;
}

QMatrix map_to_dense(const LinearMap& m) {
  QMatrix d(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, c] : m.columns[j]) d(i, j) = c;
  return d;
}

}  // namespace

std::vector<BlockElement> socle(const GradedBasisTable& tab) {
  if (!tab.terminated()) throw std::invalid_argument("socle needs a finite-dimensional table");
  const auto& p = tab.presentation();
  const int r = tab.num_vertices();
  std::vector<BlockElement> out;
  for (int n = 0; n <= tab.top_degree(); ++n)
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        const int d = tab.dim(n, s, t);
        if (d == 0) continue;
        std::vector<QMatrix> maps;
        for (int g = 0; g < p.num_generators(); ++g) {
          const Generator& gen = p.generator(g);
          if (gen.source == t) maps.push_back(map_to_dense(tab.right_mult(g, n, s)));
          if (gen.target == s) maps.push_back(map_to_dense(tab.left_mult(g, n, t)));
        }
        for (auto& v : kernel_of_stack(maps, d)) out.push_back(BlockElement{n, s, t, std::move(v)});
      }
  return out;
}

QMatrix trace_form(const RegularRep& rep) {
  const int n = rep.dimension;
  std::vector<std::vector<QVec>> prod(n, std::vector<QVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i][j] = rep.multiply(rep.basis_vector(i), rep.basis_vector(j));
  std::vector<Rational> tr(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) tr[k] += prod[k][j][j];
  QMatrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (sgn(prod[i][j][k]) != 0) t(i, j) += prod[i][j][k] * tr[k];
  return t;
}

int trace_form_rank(const RegularRep& rep) { return trace_form(rep).rank(); }

std::vector<QVec> jacobson_radical(const RegularRep& rep) { return trace_form(rep).kernel(); }

std::vector<QVec> socle(const RegularRep& rep) {
  std::vector<QMatrix> maps;
  for (const auto& j : jacobson_radical(rep)) {
    maps.push_back(rep.left_matrix(j));
    maps.push_back(rep.right_matrix(j));
  }
  return kernel_of_stack(maps, rep.dimension);
}

FrobeniusReport frobenius_check(const GradedBasisTable& tab, int d) {
  FrobeniusReport rep;
  if (!tab.terminated()) throw std::invalid_argument("Frobenius check needs a finite-dimensional table");
  for (int n = 0; n <= std::max(d, tab.top_degree()); ++n) rep.hilbert.push_back(tab.dim(n));
  bool symmetric = tab.top_degree() <= d;
  for (int n = 0; n <= d && symmetric; ++n) symmetric = rep.hilbert[n] == rep.hilbert[d - n];
  if (!symmetric) {
    std::ostringstream os;
    os << "Hilbert polynomial is not palindromic of degree " << d << ": P(t) =";
    for (size_t n = 0; n < rep.hilbert.size(); ++n) os << " " << rep.hilbert[n];
    os << " ; t^d P(1/t) =";
    for (int n = 0; n <= d; ++n) os << " " << rep.hilbert[d - n];
    rep.precondition_message = os.str();
    return rep;
  }
  rep.precondition_ok = true;
  const int r = tab.num_vertices();
  auto top = tab.dimension_matrix(d);
  rep.top_is_permutation = true;
  rep.sigma.assign(r, -1);
  std::vector<int> col_hits(r, 0);
  for (int s = 0; s < r; ++s) {
    long rowsum = 0;
    for (int t = 0; t < r; ++t) {
      rowsum += top[s][t];
      if (top[s][t] == 1) rep.sigma[s] = t;
      col_hits[t] += static_cast<int>(top[s][t]);
    }
    if (rowsum != 1) rep.top_is_permutation = false;
  }
  for (int t = 0; t < r; ++t)
    if (col_hits[t] != 1) rep.top_is_permutation = false;
  rep.pass = rep.top_is_permutation;
  if (!rep.top_is_permutation) return rep;
  for (int i = 0; i <= d; ++i) {
    bool ok = true;
    for (int s = 0; s < r && ok; ++s)
      for (int q = 0; q < r && ok; ++q) {
        const int a = tab.dim(i, s, q), b = tab.dim(d - i, q, rep.sigma[s]);
        if (a != b) {
          ok = false;
          break;
        }
        if (a == 0) continue;
        QMatrix pairing(a, b);
        for (int x = 0; x < a; ++x) {
          BlockElement bx = tab.unit_vector(i, s, q, x);
          for (int y = 0; y < b; ++y) {
            BlockElement prod = tab.multiply(bx, tab.unit_vector(d - i, q, rep.sigma[s], y));
            pairing(x, y) = prod.coords.at(0);
          }
        }
        ok = pairing.rank() == a;
      }
    rep.degree_pass.push_back(ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

std::vector<Rational> poly_from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  std::vector<Rational> p{Rational(1)};
  for (const auto& [r, m] : roots)
    for (int k = 0; k < m; ++k) p = poly_mul(p, {Rational(-r), Rational(1)});
  return p;
}

namespace {

// Best rational approximation with bounded denominator.
Rational rationalize(double x, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(v);
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = v - a;
    if (std::fabs(frac) < 1e-12) break;
    v = 1.0 / frac;
  }
  return make_rational(h1, k1);
}

}  // namespace

FactoredCharPoly factor_charpoly(std::vector<Rational> coeffs, const QMatrix* numeric_source,
                                 const std::vector<Rational>& candidate_roots) {
  FactoredCharPoly out;
  out.coeffs = coeffs;
  std::vector<Rational> rest = coeffs;
  auto try_root = [&](const Rational& r) {
    for (const auto& [have, m] : out.roots)
      if (have == r) return;
    int m = poly_divide_root(rest, r);
    if (m > 0) out.roots.emplace_back(r, m);
  };
  for (const auto& r : candidate_roots) try_root(r);
  if (rest.size() > 1 && numeric_source) {
    const int n = numeric_source->rows();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = to_double((*numeric_source)(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    for (int k = 0; k < n; ++k) {
      auto ev = es.eigenvalues()[k];
      if (std::fabs(ev.imag()) > 1e-6) continue;
      try_root(rationalize(ev.real(), 100000));
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.cofactor = rest;
  return out;
}

FactoredCharPoly charpoly_of_element(const RegularRep& rep, const QVec& x,
                                     const std::vector<Rational>& candidate_roots) {
  QMatrix l = rep.left_matrix(x);
  return factor_charpoly(l.charpoly(), &l, candidate_roots);
}

std::string FactoredCharPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, m] : roots) {
    if (!first) os << " ";
    first = false;
    if (sgn(r) == 0)
      os << "T";
    else
      os << "(T " << (sgn(r) > 0 ? "- " : "+ ") << Rational(abs(r)).get_str() << ")";
    if (m > 1) os << "^" << m;
  }
  if (cofactor.size() > 1) {
    os << (first ? "" : " ") << "[";
    for (size_t k = 0; k < cofactor.size(); ++k) os << (k ? ", " : "") << cofactor[k].get_str();
    os << "]";
  }
  return first && cofactor.size() <= 1 ? "1" : os.str();
}

}  // namespace pbench::nc
