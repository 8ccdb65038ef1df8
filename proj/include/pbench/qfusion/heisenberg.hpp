#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pbench/exact/laurent.hpp"

namespace pbench::qfusion {

// Coefficients are Laurent polynomials in q.
using Monomial = std::array<int, 3>;  // (i, j, m) for y^i x^j z^m

// Element of the quantum Heisenberg algebra xy - q yx = z, z central, kept
// in the normal basis y^i x^j z^m.
class HeisenbergElement {
 public:
  HeisenbergElement() = default;
  static HeisenbergElement monomial(int i, int j, int m, const LaurentPoly& c = LaurentPoly(1));

  const std::map<Monomial, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(int i, int j, int m) const;
  void add(const Monomial& mono, const LaurentPoly& c);
  bool is_zero() const { return terms_.empty(); }
  // All monomials share this degree i + j + 2m; -1 when zero or mixed.
  int degree() const;

  HeisenbergElement& operator+=(const HeisenbergElement& o);
  HeisenbergElement operator+(const HeisenbergElement& o) const;
  HeisenbergElement operator-(const HeisenbergElement& o) const;
  HeisenbergElement operator*(const LaurentPoly& c) const;
  HeisenbergElement operator*(const HeisenbergElement& o) const;
  bool operator==(const HeisenbergElement& o) const { return terms_ == o.terms_; }

  std::string to_string() const;
  nlohmann::json to_json() const;  // list of [i, j, m, coeff]

 private:
  std::map<Monomial, LaurentPoly> terms_;
};

// Linear combination of words over the letters x, y, z.
using WordElement = std::map<std::string, LaurentPoly>;

// Rewrites xy -> q yx + z and moves z to the right until every word is
// y^i x^j z^m. Throws std::invalid_argument on letters other than x, y, z.
HeisenbergElement normalize(const WordElement& w);
HeisenbergElement normalize_word(const std::string& w);
WordElement to_words(const HeisenbergElement& e);

// x^p y^j from the closed sum over i of
// q^{(j-i)(p-i)} binom(p,i)_q prod_{s=1}^{i} [j-s+1]_q y^{j-i} x^{p-i} z^i.
HeisenbergElement closed_commutation(int p, int j);

enum class UqGenerator { E, F, K, Kinv };  // K = q^h

// Module-algebra action extended by the coproduct
// Delta(e) = e (x) K + 1 (x) e, Delta(f) = f (x) 1 + K^{-1} (x) f.
HeisenbergElement uq_action(UqGenerator g, const HeisenbergElement& a);
// On a single word before normalization.
WordElement uq_action_word(UqGenerator g, const std::string& w);

// All normal monomials of degree n.
std::vector<Monomial> degree_basis(int n);

}  // namespace pbench::qfusion
