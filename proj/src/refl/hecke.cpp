#include "pbench/refl/hecke.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace pbench::refl {

namespace {

Rational frac_part(const Rational& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Rational(t - Rational(fl));
}

}  // namespace

std::complex<double> HeckeParameter::value() const {
  const double angle = 2.0 * std::numbers::pi * to_double(frac_part(turn));
  return std::polar(to_double(scale), angle);
}

bool HeckeParameter::is_rational() const {
  const Rational f = frac_part(turn);
  return f == 0 || f == make_rational(1, 2);
}

Rational HeckeParameter::rational_value() const {
  if (!is_rational()) throw std::domain_error("parameter " + to_string() + " is not rational");
  return frac_part(turn) == 0 ? scale : -scale;
}

std::string HeckeParameter::to_string() const {
  if (frac_part(turn) == 0) return pbench::to_string(scale);
  return pbench::to_string(scale) + "*exp(2*pi*i*" + pbench::to_string(frac_part(turn)) + ")";
}

std::vector<int> family_leg_orders(Family f) {
  switch (f) {
    case Family::Tetrahedral: return {3, 3, 2};
    case Family::Octahedral: return {4, 3, 2};
    case Family::Icosahedral: return {5, 3, 2};
  }
  return {};
}

long family_group_order(Family f) {
  switch (f) {
    case Family::Tetrahedral: return 12;
    case Family::Octahedral: return 24;
    case Family::Icosahedral: return 60;
  }
  return 0;
}

std::string family_quiver_type(Family f) {
  switch (f) {
    case Family::Tetrahedral: return "E6";
    case Family::Octahedral: return "E7";
    case Family::Icosahedral: return "E8";
  }
  return "";
}

HeckePresentation hecke_presentation(Family f, std::vector<std::vector<HeckeParameter>> params, bool set_z_to_one) {
  HeckePresentation h;
  h.family = f;
  h.leg_orders = family_leg_orders(f);
  if (params.size() != h.leg_orders.size())
    throw std::invalid_argument(family_name(f) + " needs " + std::to_string(h.leg_orders.size()) + " parameter lists");
  for (size_t k = 0; k < params.size(); ++k)
    if (static_cast<int>(params[k].size()) != h.leg_orders[k])
      throw std::invalid_argument("Y" + std::to_string(k + 1) + " needs " + std::to_string(h.leg_orders[k]) +
                                  " parameters, got " + std::to_string(params[k].size()));
  h.params = std::move(params);
  h.z_is_one = set_z_to_one;
  return h;
}

HeckePresentation unipotent_hecke(Family f, bool set_z_to_one) {
  std::vector<std::vector<HeckeParameter>> params;
  for (int d : family_leg_orders(f)) params.emplace_back(d, HeckeParameter{});
  return hecke_presentation(f, std::move(params), set_z_to_one);
}

std::vector<std::string> HeckePresentation::relation_text() const {
  std::vector<std::string> out;
  std::string prod;
  for (int k = 0; k < num_generators(); ++k) {
    std::string rel;
    for (const auto& b : params[k]) rel += "(Y" + std::to_string(k + 1) + " - " + b.to_string() + ")";
    out.push_back(rel + " = 0");
    prod += "Y" + std::to_string(k + 1);
  }
  out.push_back(z_is_one ? prod + " = 1" : prod + " central");
  return out;
}

nlohmann::json HeckePresentation::to_json() const {
  nlohmann::json p = nlohmann::json::array();
  for (const auto& row : params) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& b : row) r.push_back(b.to_string());
    p.push_back(r);
  }
  return {{"family", family_name(family)}, {"leg_orders", leg_orders}, {"parameters", p},
          {"z_is_one", z_is_one},          {"relations", relation_text()}};
}

namespace {

// Polynomial in a single noncommuting letter sequence: word -> coefficient.
using WordPoly = std::map<nc::Word, Rational>;

WordPoly times(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      nc::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  return out;
}

void add_poly(nc::AlgebraPresentation& p, const WordPoly& poly, const std::string& label) {
  std::vector<nc::Term> t;
  for (const auto& [w, c] : poly)
    if (c != 0) t.push_back({c, w.empty() ? p.idempotent(0) : p.path_of(w, 0)});
  p.add_relation(std::move(t), label);
}

}  // namespace

nc::AlgebraPresentation HeckePresentation::to_algebra() const {
  nc::AlgebraPresentation p(1);
  const int m = num_generators();
  for (int k = 0; k < m; ++k) p.add_generator("Y" + std::to_string(k + 1), 0, 0, 1);
  for (int k = 0; k < m; ++k) {
    WordPoly poly{{{}, Rational(1)}};
    for (const auto& b : params[k]) poly = times(poly, WordPoly{{{k}, Rational(1)}, {{}, -b.rational_value()}});
    add_poly(p, poly, "Y" + std::to_string(k + 1) + " leg");
  }
  nc::Word z;
  for (int k = 0; k < m; ++k) z.push_back(k);
  if (z_is_one) {
    add_poly(p, WordPoly{{z, Rational(1)}, {{}, Rational(-1)}}, "Z = 1");
  } else {
    for (int k = 0; k < m; ++k) {
      nc::Word left{k}, right = z;
      left.insert(left.end(), z.begin(), z.end());
      right.push_back(k);
      add_poly(p, WordPoly{{left, Rational(1)}, {right, Rational(-1)}}, "Z central");
    }
  }
  p.validate();
  return p;
}

nc::AlgebraPresentation hstar_presentation(Family f) {
  const auto d = family_leg_orders(f);
  const int m = static_cast<int>(d.size());
  nc::AlgebraPresentation p(1);
  for (int k = 0; k < m; ++k) p.add_generator("u" + std::to_string(k + 1), 0, 0, 1);
  for (int k = 0; k < m; ++k)
    add_poly(p, WordPoly{{nc::Word(d[k], k), Rational(1)}}, "u" + std::to_string(k + 1) + " nilpotent");
  WordPoly prod{{{}, Rational(1)}};
  for (int k = 0; k < m; ++k) prod = times(prod, WordPoly{{{}, Rational(1)}, {{k}, Rational(1)}});
  prod[{}] -= Rational(1);
  add_poly(p, prod, "product = 1");
  p.validate();
  return p;
}

long hstar_dimension(Family f, const nc::FilteredOptions& opts) {
  nc::FilteredOptions o = opts;
  o.build_gr_table = false;
  return nc::build_filtered_basis(hstar_presentation(f), o).total_dimension;
}

}  // namespace pbench::refl
