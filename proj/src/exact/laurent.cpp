#include "pbench/exact/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace pbench {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::truncate(int max_exp) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e > max_exp) break;
    r.terms_.emplace(e, c);
  }
  return r;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational b = e >= 0 ? x : Rational(1) / x;
    for (int i = 0; i < std::abs(e); ++i) p *= b;
    acc += c * p;
  }
  return acc;
}

Rational LaurentPoly::sum_of_coefficients() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Shift both into ordinary polynomials with nonzero constant term for b.
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int bmin = b.min_degree();
  const int bmax = b.max_degree();
  const Rational& lead = b.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    int rmax = rem.max_degree();
    if (rmax - bmax < rem.min_degree() - bmin) return std::nullopt;
    Rational c = rem.terms_.rbegin()->second / lead;
    int e = rmax - bmax;
    quot.add_term(e, c);
    for (const auto& [be, bc] : b.terms_) rem.add_term(be + e, -c * bc);
  }
  return quot;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : terms_) j[std::to_string(e)] = rational_to_json(c);
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) p.add_term(std::stoi(it.key()), rational_from_json(it.value()));
  return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r *= b;
  return r;
}
LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

LaurentPoly qint(int n) {
  if (n < 0) throw std::domain_error("qint of negative integer");
  LaurentPoly p;
  for (int e = 0; e < n; ++e) p.add_term(e, 1);
  return p;
}

LaurentPoly qfact(int p) {
  if (p < 0) throw std::domain_error("qfact of negative integer");
  LaurentPoly r(1);
  for (int k = 2; k <= p; ++k) r *= qint(k);
  return r;
}

LaurentPoly qbinom(int p, int i) {
  if (p < 0 || i < 0 || i > p) throw std::domain_error("qbinom index outside [0, p]");
  auto q = LaurentPoly::divide_exact(qfact(p), qfact(i) * qfact(p - i));
  if (!q) throw std::logic_error("q-binomial division was not exact");
  return *q;
}

LaurentPoly qint_symmetric(int n) {
  if (n < 0) return -qint_symmetric(-n);
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(n - 1 - 2 * k, 1);
  return p;
}

}  // namespace pbench
