#include "pbench/qfusion/fusion.hpp"

#include <stdexcept>

#include "pbench/qfusion/heisenberg.hpp"

namespace pbench::qfusion {

LaurentPoly graded_character(int n) {
  LaurentPoly ch;
  for (const auto& m : degree_basis(n)) {
    // K acts on a normal monomial by a single power of q: its weight
    const auto k = uq_action(UqGenerator::K, HeisenbergElement::monomial(m[0], m[1], m[2]));
    const LaurentPoly c = k.coeff(m[0], m[1], m[2]);
    if (c.terms().size() != 1 || c.terms().begin()->second != 1)
      throw std::logic_error("normal monomials are not weight vectors");
    ch.add_term(c.terms().begin()->first, 1);
  }
  return ch;
}

LaurentPoly simple_character(int k) {
  LaurentPoly ch;
  for (int w = -k; w <= k; w += 2) ch.add_term(w, 1);
  return ch;
}

FusionElement decompose(const LaurentPoly& character) {
  LaurentPoly rest = character;
  FusionElement mult;
  while (!rest.is_zero()) {
    const int top = rest.max_degree();
    const Rational c = rest.coeff(top);
    if (top < 0 || c < 0 || c.get_den() != 1)
      throw std::domain_error("character is not a nonnegative combination of simple characters");
    if (static_cast<int>(mult.size()) <= top) mult.resize(top + 1, 0);
    mult[top] += c.get_num().get_si();
    rest -= simple_character(top) * c;
  }
  return mult;
}

FusionElement verlinde_product(int i, int j, int level) {
  if (level < 0 || i < 0 || j < 0 || i > level || j > level) throw std::out_of_range("index outside the fusion level");
  FusionElement r(level + 1, 0);
  const int top = std::min({i, j, level - std::max(i, j)});
  for (int n = 0; n <= top; ++n) ++r[2 * n + std::abs(i - j)];
  return r;
}

FusionElement clebsch_gordan(int i, int j) {
  if (i < 0 || j < 0) throw std::out_of_range("negative highest weight");
  FusionElement r(i + j + 1, 0);
  for (int n = 0; n <= std::min(i, j); ++n) ++r[2 * n + std::abs(i - j)];
  return r;
}

FusionElement fusion_multiply(const FusionElement& a, const FusionElement& b, int level) {
  FusionElement r(level + 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      const auto p = verlinde_product(static_cast<int>(i), static_cast<int>(j), level);
      for (int k = 0; k <= level; ++k) r[k] += a[i] * b[j] * p[k];
    }
  return r;
}

QMatrix tchebysheff(int j, const QMatrix& m) {
  QMatrix prev(m.rows(), m.cols());
  QMatrix cur = QMatrix::identity(m.rows());
  for (int k = 0; k < j; ++k) {
    QMatrix next = m * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QMatrix fusion_functor_image(const FusionElement& e, const QMatrix& c) {
  QMatrix r(c.rows(), c.cols());
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) r = r + tchebysheff(static_cast<int>(k), c) * Rational(e[k]);
  return r;
}

std::vector<FusionElement> algebra_A_structure(int h) {
  if (h < 2) throw std::invalid_argument("h must be at least 2");
  std::vector<FusionElement> out;
  for (int n = 0; n <= 2 * h - 4; ++n) {
    const int s = std::min(n, 2 * h - 4 - n);
    FusionElement e(h - 1, 0);
    for (int j = 0; 2 * j <= s; ++j) ++e[s - 2 * j];
    out.push_back(e);
  }
  return out;
}

}  // namespace pbench::qfusion
