#pragma once

#include <map>
#include <optional>
#include <string>

#include "pbench/exact/rational.hpp"

namespace pbench {

// Sparse Laurent polynomial in one formal variable.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c);             // NOLINT

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  Rational coeff(int exponent) const;
  void add_term(int exponent, const Rational& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  // q -> q^{-1}
  LaurentPoly invert_variable() const;
  // q -> q^k
  LaurentPoly substitute_power(int k) const;
  LaurentPoly shift(int k) const;
  LaurentPoly pow(unsigned e) const;
  // Keep only exponents <= max_exp.
  LaurentPoly truncate(int max_exp) const;
  Rational evaluate(const Rational& x) const;
  Rational sum_of_coefficients() const;

  // Exact quotient a / b if b divides a in the Laurent ring, otherwise nullopt.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string(const std::string& var = "q") const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, Rational> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Rational& c);
LaurentPoly operator*(const Rational& c, LaurentPoly a);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
LaurentPoly qint(int n);
LaurentPoly qfact(int p);
// Computed as an exact quotient of q-factorials; throws on i outside [0, p].
LaurentPoly qbinom(int p, int i);
// Symmetric bracket (v^n - v^{-n}) / (v - v^{-1}).
LaurentPoly qint_symmetric(int n);

}  // namespace pbench
