#include "pbench/nc/regular_rep.hpp"

#include <sstream>
#include <stdexcept>

namespace pbench::nc {

QVec RegularRep::basis_vector(int j) const {
  QVec v(dimension);
  v.at(j) = 1;
  return v;
}

QVec RegularRep::idempotent(int v) const {
  QVec x(dimension);
  int j = index_of(Path{v, v, {}});
  if (j >= 0) x[j] = 1;
  return x;
}

QVec RegularRep::unit() const {
  QVec x(dimension);
  for (int v = 0; v < pres->num_vertices(); ++v) {
    int j = index_of(Path{v, v, {}});
    if (j >= 0) x[j] = 1;
  }
  return x;
}

int RegularRep::index_of(const Path& p) const {
  for (int j = 0; j < dimension; ++j)
    if (basis[j] == p) return j;
  return -1;
}

QVec RegularRep::times_generator(const QVec& x, int g) const { return right.at(g).apply(x); }

QVec RegularRep::generator_times(int g, const QVec& x) const { return left.at(g).apply(x); }

QVec RegularRep::times_word(QVec x, const Word& w) const {
  for (int g : w) x = times_generator(x, g);
  return x;
}

QVec RegularRep::multiply(const QVec& x, const QVec& y) const {
  QVec r(dimension);
  for (int j = 0; j < dimension; ++j) {
    if (sgn(y[j]) == 0) continue;
    const Path& b = basis[j];
    // x * e_v keeps the components of x ending at v
    QVec xs(dimension);
    for (int i = 0; i < dimension; ++i)
      if (basis[i].target == b.source) xs[i] = x[i];
    QVec part = times_word(xs, b.letters);
    for (int i = 0; i < dimension; ++i)
      if (sgn(part[i]) != 0) r[i] += y[j] * part[i];
  }
  return r;
}

QVec RegularRep::normal_form(const Path& p) const { return times_word(idempotent(p.source), p.letters); }

QVec RegularRep::evaluate(const std::vector<Term>& terms) const {
  QVec r(dimension);
  for (const auto& t : terms) {
    QVec v = normal_form(t.path);
    for (int i = 0; i < dimension; ++i) r[i] += t.coeff * v[i];
  }
  return r;
}

QMatrix RegularRep::left_matrix(const QVec& x) const {
  QMatrix m(dimension, dimension);
  for (int j = 0; j < dimension; ++j) {
    QVec c = multiply(x, basis_vector(j));
    for (int i = 0; i < dimension; ++i) m(i, j) = c[i];
  }
  return m;
}

QMatrix RegularRep::right_matrix(const QVec& x) const {
  QMatrix m(dimension, dimension);
  for (int j = 0; j < dimension; ++j) {
    QVec c = multiply(basis_vector(j), x);
    for (int i = 0; i < dimension; ++i) m(i, j) = c[i];
  }
  return m;
}

std::string RegularRep::element_to_string(const QVec& x) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dimension; ++i) {
    if (sgn(x[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x[i].get_str() << ") " << pres->path_to_string(basis[i]);
  }
  return first ? "0" : os.str();
}

RegularRep regular_rep_from_table(const GradedBasisTable& tab) {
  if (!tab.terminated()) throw std::invalid_argument("regular representation needs a finite-dimensional table");
  RegularRep rep;
  rep.pres = std::make_shared<const AlgebraPresentation>(tab.presentation());
  const int r = tab.num_vertices();
  // offsets of each block in the global basis
  std::vector<std::vector<int>> offset(tab.computed_degree() + 1, std::vector<int>(r * r, 0));
  for (int n = 0; n <= tab.computed_degree(); ++n)
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        offset[n][s * r + t] = rep.dimension;
        for (const auto& p : tab.basis(n, s, t)) {
          rep.basis.push_back(p);
          rep.degree.push_back(n);
        }
        rep.dimension += tab.dim(n, s, t);
      }
  const int G = rep.pres->num_generators();
  rep.left.assign(G, LinearMap{rep.dimension, rep.dimension, std::vector<QSparseVec>(rep.dimension)});
  rep.right = rep.left;
  for (int n = 0; n <= tab.computed_degree(); ++n)
    for (int g = 0; g < G; ++g) {
      const Generator& gen = rep.pres->generator(g);
      const int m = n + gen.degree;
      for (int s = 0; s < r; ++s) {
        // right: block (n, s, src g) -> (m, s, tgt g)
        const LinearMap& rm = tab.right_mult(g, n, s);
        const int from = offset[n][s * r + gen.source];
        for (int j = 0; j < rm.cols; ++j)
          for (const auto& [i, c] : rm.columns[j])
            rep.right[g].columns[from + j].emplace_back(offset[m][s * r + gen.target] + i, c);
      }
      for (int t = 0; t < r; ++t) {
        const LinearMap& lm = tab.left_mult(g, n, t);
        const int from = offset[n][gen.target * r + t];
        for (int j = 0; j < lm.cols; ++j)
          for (const auto& [i, c] : lm.columns[j])
            rep.left[g].columns[from + j].emplace_back(offset[m][gen.source * r + t] + i, c);
      }
    }
  return rep;
}

long relation_violations(const RegularRep& rep) {
  long bad = 0;
  const auto& p = *rep.pres;
  for (const auto& rel : p.relations())
    for (int j = 0; j < rep.dimension; ++j) {
      QVec b = rep.basis_vector(j);
      QVec lsum(rep.dimension), rsum(rep.dimension);
      for (const auto& term : rel.terms) {
        // left action: word applied letter by letter from the right end
        QVec l = b;
        if (rep.basis[j].source != rel.target) l.assign(rep.dimension, Rational(0));
        for (auto it = term.path.letters.rbegin(); it != term.path.letters.rend(); ++it) l = rep.generator_times(*it, l);
        QVec rr = b;
        if (rep.basis[j].target != rel.source) rr.assign(rep.dimension, Rational(0));
        rr = rep.times_word(rr, term.path.letters);
        for (int i = 0; i < rep.dimension; ++i) {
          lsum[i] += term.coeff * l[i];
          rsum[i] += term.coeff * rr[i];
        }
      }
      for (int i = 0; i < rep.dimension; ++i)
        if (sgn(lsum[i]) != 0 || sgn(rsum[i]) != 0) {
          ++bad;
          break;
        }
    }
  return bad;
}

}  // namespace pbench::nc
