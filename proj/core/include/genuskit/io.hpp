#pragma once

// JSON schemas and the plain-text series format.
//
//   series            {"var": "z", "order": T, "coefficients": ["c0", ..., "cT"]}
//   parameter series  {"var": "z", "order": T, "parameter": "rho",
//                      "coefficients": [["a0", "a1", ...], ...]}   (polynomial per z-power)
//   weighted poly     {"weight_bound": W, "unit_weight": 4,
//                      "terms": [{"exponents": [e1, e2, ...], "coeff": "num/den"}, ...]}
//   graded element    {"generators": [{"name": "g3", "degree": 3}, ...], "degree_bound": D,
//                      "t_bound": T, "terms": [{"monomial": ["g3", "g4", "g4"],
//                      "coeff_t_poly": ["re+im*i", ...]}, ...]}
//   habel row         {"n": n, "habel": "c/d", "ratio": "c/d", "agree": true}
//
// Rationals are strings "p" or "p/q"; Gaussian rationals "re+im*i". Terms
// appear in canonical (lexicographic multi-index) order.
//
// Series text file: '#' starts a comment line; the first other line is
// "series <var> <order>", followed by order + 1 whitespace-separated
// coefficients, lowest degree first.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "genuskit/eta.hpp"
#include "genuskit/graded.hpp"
#include "genuskit/named_series.hpp"
#include "genuskit/weighted_polynomial.hpp"

namespace genuskit {

using Json = nlohmann::json;

Json to_json(const RationalSeries& s);
RationalSeries rational_series_from_json(const Json& j);

Json to_json(const ParamSeries& s, std::string_view parameter = "rho");
ParamSeries param_series_from_json(const Json& j);

/// Coefficient strings by degree.
Json to_json(const RatPolynomial& p);
RatPolynomial rat_polynomial_from_json(const Json& j);

Json to_json(const WeightedPolynomial<Rational>& p);
WeightedPolynomial<Rational> weighted_polynomial_from_json(const Json& j);

Json to_json(const GradedElement& a);
GradedElement graded_element_from_json(const Json& j);

/// habel/ratio are the coefficients of rho^n.
Json to_json(const HabelEntry& e);

RationalSeries parse_series_text(std::string_view text);
std::string format_series_text(const RationalSeries& s);
RationalSeries read_series_file(const std::string& path);

}  // namespace genuskit
