#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace pbench {

// Arbitrary precision rationals. GMP keeps results of arithmetic canonical;
// make_rational canonicalizes explicitly built fractions.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
double to_double(const Rational& x);

// JSON form is [num, den] with decimal strings so nothing overflows.
nlohmann::json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace pbench
