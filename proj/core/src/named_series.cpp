#include "genuskit/named_series.hpp"

#include <algorithm>

namespace genuskit {

namespace {

Rational inv_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

/// sinh(z) / z, known to the requested order.
RationalSeries sinhc_series(int order) {
  RationalSeries s(order);
  for (int k = 0; k <= order; k += 2) s[k] = inv_factorial(k + 1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

RationalSeries exp_series(int order) {
  RationalSeries s(order);
  for (int k = 0; k <= order; ++k) s[k] = inv_factorial(k);
  return s;
}

RationalSeries sinh_series(int order) {
  RationalSeries s(order);
  for (int k = 1; k <= order; k += 2) s[k] = inv_factorial(k);
  return s;
}

RationalSeries cosh_series(int order) {
  RationalSeries s(order);
  for (int k = 0; k <= order; k += 2) s[k] = inv_factorial(k);
  return s;
}

RationalSeries tanh_series(int order) {
  if (order == 0) return RationalSeries(0);
  // tanh z = z * (sinh z / z) / cosh z
  return series_div(sinhc_series(order - 1), cosh_series(order - 1)).shifted_up(1);
}

RationalSeries artanh_series(int order) {
  RationalSeries s(order);
  for (int k = 1; k <= order; k += 2) s[k] = Rational(BigInt(1), BigInt(k));
  return s;
}

RationalSeries arsinh_series(int order) {
  // d/dz arsinh z = (1 + z^2)^{-1/2} = sum_k (-1/4)^k C(2k, k) z^{2k}
  RationalSeries s(order);
  Rational quarter_pow(1);
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    s[2 * k + 1] = quarter_pow * Rational(central_binomial(k)) * Rational(BigInt(1), BigInt(2 * k + 1));
    quarter_pow *= Rational(-1, 4);
  }
  return s;
}

RationalSeries l_genus_series(int order) {
  // z / tanh z = cosh z / (sinh z / z)
  return series_div(cosh_series(order), sinhc_series(order));
}

RationalSeries ahat_series(int order) {
  // (z/2) / sinh(z/2) = 1 / (sinh(w)/w) at w = z/2
  return series_inverse_mul(series_rescale(sinhc_series(order), Rational(1, 2)));
}

ParamSeries quantized_pontryagin_series(int order) {
  ParamSeries s = ParamSeries::one(order);
  const RatPolynomial two_t = RatPolynomial::monomial(Rational(2), 1);
  for (int k = 2; k <= order; k += 2) s[k] = two_t * inv_factorial(k);
  return s;
}

ParamSeries quantized_symmetric_series(int order) {
  ParamSeries d = ParamSeries::one(order);
  const RatPolynomial minus_two_t = RatPolynomial::monomial(Rational(-2), 1);
  for (int k = 2; k <= order; k += 2) d[k] = minus_two_t * inv_factorial(k);
  return series_inverse_mul(d);
}

ParamSeries quantized_chern_series(int order) {
  ParamSeries s = ParamSeries::one(order);
  const RatPolynomial t = RatPolynomial::variable();
  for (int k = 1; k <= order; ++k) s[k] = t * inv_factorial(k);
  return s;
}

std::vector<std::string> rational_series_names() {
  return {"tanh", "artanh", "sinh", "cosh", "exp", "arsinh", "l", "ahat", "trivial"};
}

std::vector<std::string> param_series_names() { return {"p", "s", "c"}; }

RationalSeries named_series(std::string_view name, int order) {
  const std::string n = lower(name);
  if (n == "tanh") return tanh_series(order);
  if (n == "artanh") return artanh_series(order);
  if (n == "sinh") return sinh_series(order);
  if (n == "cosh") return cosh_series(order);
  if (n == "exp") return exp_series(order);
  if (n == "arsinh") return arsinh_series(order);
  if (n == "l") return l_genus_series(order);
  if (n == "ahat") return ahat_series(order);
  if (n == "trivial") return RationalSeries::one(order);
  throw DomainError("unknown series name: '" + std::string(name) + "'");
}

ParamSeries named_param_series(std::string_view name, int order) {
  const std::string n = lower(name);
  if (n == "p") return quantized_pontryagin_series(order);
  if (n == "s") return quantized_symmetric_series(order);
  if (n == "c") return quantized_chern_series(order);
  throw DomainError("unknown parametrized series name: '" + std::string(name) + "'");
}

ParamSeries to_param_series(const RationalSeries& s) {
  std::vector<RatPolynomial> v;
  v.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) v.emplace_back(c);
  return ParamSeries(std::move(v), s.var());
}

}  // namespace genuskit
