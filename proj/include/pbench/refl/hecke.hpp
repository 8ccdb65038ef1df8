#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbench/exact/rational.hpp"
#include "pbench/nc/groebner.hpp"
#include "pbench/nc/presentation.hpp"
#include "pbench/refl/groups.hpp"

namespace pbench::refl {

// scale * exp(2 pi i turn), kept exact.
struct HeckeParameter {
  Rational scale{1};
  Rational turn{0};

  std::complex<double> value() const;
  bool is_rational() const;  // turn is 0 or 1/2 modulo 1
  Rational rational_value() const;
  std::string to_string() const;
};

struct HeckePresentation {
  Family family = Family::Tetrahedral;
  std::vector<int> leg_orders;                       // d_k
  std::vector<std::vector<HeckeParameter>> params;   // b_{jk}, params[k][j]
  bool z_is_one = false;

  int num_generators() const { return static_cast<int>(leg_orders.size()); }
  std::vector<std::string> relation_text() const;
  nlohmann::json to_json() const;
  // Presentation over Q in Y_1..Y_m; needs every parameter rational.
  nc::AlgebraPresentation to_algebra() const;
};

// (3,3,2), (4,3,2), (5,3,2)
std::vector<int> family_leg_orders(Family f);
// Order of the base group, which is also q1 q2 of the matching E type.
long family_group_order(Family f);
std::string family_quiver_type(Family f);

// Throws std::invalid_argument when params[k] does not have d_k entries.
HeckePresentation hecke_presentation(Family f, std::vector<std::vector<HeckeParameter>> params, bool set_z_to_one);
HeckePresentation unipotent_hecke(Family f, bool set_z_to_one = true);

// u_k = Y_k - 1: u_k^{d_k} = 0 and (1+u_1)...(1+u_m) = 1.
nc::AlgebraPresentation hstar_presentation(Family f);
long hstar_dimension(Family f, const nc::FilteredOptions& opts = {});

}  // namespace pbench::refl
