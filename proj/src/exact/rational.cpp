#include "pbench/exact/rational.hpp"

#include <stdexcept>

namespace pbench {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::domain_error("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

double to_double(const Rational& x) { return x.get_d(); }

nlohmann::json rational_to_json(const Rational& x) {
  return nlohmann::json::array({x.get_num().get_str(), x.get_den().get_str()});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  auto part = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
  };
  return parse_rational(part(j[0]) + "/" + part(j[1]));
}

}  // namespace pbench
