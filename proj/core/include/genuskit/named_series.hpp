#pragma once

// Exact expansions of the transcendental series the genus and eta
// computations are built from.

#include <string_view>
#include <vector>
#include <string>

#include "genuskit/arith.hpp"
#include "genuskit/series.hpp"

namespace genuskit {

using RationalSeries = PowerSeries<Rational>;
/// Series whose coefficients are polynomials in a parameter (rho or t).
using ParamSeries = PowerSeries<RatPolynomial>;

RationalSeries exp_series(int order);
RationalSeries sinh_series(int order);
RationalSeries cosh_series(int order);
RationalSeries tanh_series(int order);
RationalSeries artanh_series(int order);
/// Integrated Newton expansion of (1 + z^2)^{-1/2}.
RationalSeries arsinh_series(int order);
/// z / tanh z
RationalSeries l_genus_series(int order);
/// (z/2) / sinh(z/2)
RationalSeries ahat_series(int order);

/// P(t, z) = 1 + 2t(cosh z - 1)
ParamSeries quantized_pontryagin_series(int order);
/// S(t, z) = (1 - 2t(cosh z - 1))^{-1}
ParamSeries quantized_symmetric_series(int order);
/// C(t, z) = 1 + t(e^z - 1)
ParamSeries quantized_chern_series(int order);

/// Names accepted by named_series: tanh, artanh, sinh, cosh, exp, arsinh,
/// l, ahat, trivial.
std::vector<std::string> rational_series_names();
/// Names accepted by named_param_series: p, s, c.
std::vector<std::string> param_series_names();

/// Throws DomainError on an unknown name.
RationalSeries named_series(std::string_view name, int order);
ParamSeries named_param_series(std::string_view name, int order);

/// Embed a rational series into the parameter ring.
ParamSeries to_param_series(const RationalSeries& s);

}  // namespace genuskit
