#include "pbench/preproj/hilbert.hpp"

#include <stdexcept>

namespace pbench::preproj {

PolyMatrix quadratic_denominator(const RootData& rd) {
  const int r = rd.rank;
  const QMatrix C = rd.adjacency_matrix();
  PolyMatrix m(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      LaurentPoly e;
      if (C(i, j) != 0) e.add_term(1, -C(i, j));
      if (i == j) {
        e.add_term(0, 1);
        e.add_term(2, 1);
      }
      m(i, j) = e;
    }
  return m;
}

namespace {

// numerator / (1 - Ct + t^2), asserting the quotient is a polynomial of
// degree at most `degree`.
PolyMatrix exact_quotient(const RootData& rd, const PolyMatrix& numerator, int degree) {
  const PolyMatrix D = quadratic_denominator(rd);
  PolyMatrix q = (series_inverse_truncated(D, degree) * numerator).truncate(degree);
  if (!(D * q == numerator)) throw std::logic_error("closed form is not a polynomial of the expected degree");
  return q;
}

}  // namespace

PolyMatrix hilbert_pi0(const RootData& rd) {
  const int h = rd.coxeter_number;
  PolyMatrix num = PolyMatrix::identity(rd.rank) + PolyMatrix::constant(rd.permutation_matrix()) * LaurentPoly::monomial(h);
  return exact_quotient(rd, num, h - 2);
}

PolyMatrix hilbert_pi0mu(const RootData& rd) {
  const int h = rd.coxeter_number;
  LaurentPoly s;
  for (int j = 0; j < h; ++j) s.add_term(2 * j, 1);
  return exact_quotient(rd, PolyMatrix::identity(rd.rank) * s, 2 * h - 4);
}

PolyMatrix hilbert_pi_series(const RootData& rd, int max_degree) {
  const int h = rd.coxeter_number;
  LaurentPoly num = LaurentPoly(1) - LaurentPoly::monomial(2 * h);
  // (1 - t^2)^{-r} = sum_k binom(k + r - 1, r - 1) t^{2k}
  LaurentPoly inv;
  for (int k = 0; 2 * k <= max_degree; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), k + rd.rank - 1, rd.rank - 1);
    inv.add_term(2 * k, Rational(b));
  }
  PolyMatrix d = series_inverse_truncated(quadratic_denominator(rd), max_degree);
  return (d * (num * inv).truncate(max_degree)).truncate(max_degree);
}

std::vector<PolyMatrix> hilbert_ideal_powers(const RootData& rd, int kmax) {
  const int h = rd.coxeter_number;
  const PolyMatrix H0 = hilbert_pi0(rd);
  const PolyMatrix P = PolyMatrix::constant(rd.permutation_matrix());
  std::vector<PolyMatrix> out;
  for (int k = 0; k <= kmax; ++k) {
    PolyMatrix Hk = H0 * LaurentPoly::monomial(2 * k);
    for (int l = 0; l < k; ++l)
      Hk = Hk - P * PolyMatrix::constant(H0.coefficient(l)) * LaurentPoly::monomial(2 * (k - 1 - l) + h + l);
    out.push_back(Hk);
  }
  return out;
}

LaurentPoly bracket_t2(int n) { return qint(n).substitute_power(2); }

long dim_pi0_formula(const RootData& rd) {
  const long h = rd.coxeter_number;
  return h * (h + 1) * rd.rank / 6;
}

long dim_pi0mu_formula(const RootData& rd) {
  const long h = rd.coxeter_number;
  return h * h * (h + 1) * rd.rank / 12;
}

PolyMatrix table_hilbert(const nc::GradedBasisTable& tab, int max_degree) {
  const int r = tab.num_vertices();
  const int top = max_degree < 0 ? tab.computed_degree() : std::min(max_degree, tab.computed_degree());
  PolyMatrix m(r);
  for (int n = 0; n <= top; ++n)
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t)
        if (int d = tab.dim(n, s, t)) m(s, t).add_term(n, d);
  return m;
}

LaurentPoly table_hilbert_scalar(const nc::GradedBasisTable& tab) { return table_hilbert(tab).entry_sum(); }

nlohmann::json coefficients_json(const PolyMatrix& m, int max_degree) {
  nlohmann::json j = nlohmann::json::array();
  for (int n = 0; n <= max_degree; ++n) {
    QMatrix c = m.coefficient(n);
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < c.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < c.cols(); ++k) row.push_back(to_string(c(i, k)));
      rows.push_back(row);
    }
    j.push_back(rows);
  }
  return j;
}

int first_difference(const PolyMatrix& a, const PolyMatrix& b, int max_degree) {
  for (int n = 0; n <= max_degree; ++n)
    if (!(a.coefficient(n) == b.coefficient(n))) return n;
  return -1;
}

CheckResult verify_hilbert_identities(const RootData& rd) {
  Stopwatch sw;
  CheckResult res;
  res.check_id = "hilbert-identity";
  res.subject = rd.type_label;
  res.claim = "closed forms of the matrix Hilbert series are mutually consistent";
  res.statement = "(1-Ct+t^2) H~(t) (1-t^2) = (1-t^{2h}) I;  H~(t)(1-t^2) = H0(t) - t^{2h-2} H0(1/t);  "
                  "H~(t) = t^{2h-4} P H~(1/t) P";
  const int r = rd.rank;
  const int h = rd.coxeter_number;
  const PolyMatrix I = PolyMatrix::identity(r);
  const PolyMatrix P = PolyMatrix::constant(rd.permutation_matrix());
  const LaurentPoly one_minus_t2 = LaurentPoly(1) - LaurentPoly::monomial(2);

  PolyMatrix H0, Ht;
  try {
    H0 = hilbert_pi0(rd);
    Ht = hilbert_pi0mu(rd);
    res.add("H0 is a polynomial of degree h-2", H0.max_degree(), h - 2, H0.max_degree() == h - 2);
    res.add("H~ is a polynomial of degree 2h-4", Ht.max_degree(), 2 * h - 4, Ht.max_degree() == 2 * h - 4);
  } catch (const std::logic_error& e) {
    res.add("closed forms are polynomials", e.what(), "polynomial", false);
    res.wall_time_ms = sw.elapsed_ms();
    return res;
  }
  {
    PolyMatrix lhs = quadratic_denominator(rd) * Ht * one_minus_t2;
    PolyMatrix rhs = I * (LaurentPoly(1) - LaurentPoly::monomial(2 * h));
    res.add("denominator identity", lhs == rhs, true, lhs == rhs);
  }
  {
    PolyMatrix lhs = Ht * one_minus_t2;
    PolyMatrix rhs = H0 - H0.invert_variable() * LaurentPoly::monomial(2 * h - 2);
    res.add("H~ from H0", lhs == rhs, true, lhs == rhs);
  }
  {
    PolyMatrix rhs = P * Ht.invert_variable() * P * LaurentPoly::monomial(2 * h - 4);
    res.add("palindromic symmetry with P", Ht == rhs, true, Ht == rhs);
  }
  {
    // sums of heights and the dimension formulas
    long heights = 0;
    for (const auto& a : rd.positive_roots) heights += rd.pairing_with_rho(a);
    const long total0 = H0.entry_sum().sum_of_coefficients().get_num().get_si();
    res.add_equal("dim Pi0 = sum of heights", total0, heights);
    res.add_equal("dim Pi0 = h(h+1)r/6", total0, dim_pi0_formula(rd));
    const long totalmu = Ht.entry_sum().sum_of_coefficients().get_num().get_si();
    res.add_equal("dim Pi0mu = h^2(h+1)r/12", totalmu, dim_pi0mu_formula(rd));
  }
  res.wall_time_ms = sw.elapsed_ms();
  return res;
}

}  // namespace pbench::preproj
