#include "genuskit/eta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "genuskit/errors.hpp"

namespace genuskit {

std::string to_string(EtaOperator op) { return op == EtaOperator::dirac ? "dirac" : "signature"; }

EtaSeries::EtaSeries(EtaOperator op, ParamSeries generating) : op_(op), generating_(std::move(generating)) {}

RatPolynomial EtaSeries::eta(int n) const {
  if (n < 1) throw DomainError("eta index must be >= 1");
  if (n > order()) throw TruncationError("eta series known to order " + std::to_string(order()));
  return op_ == EtaOperator::dirac ? generating_[n] * Rational(2) : generating_[n];
}

std::vector<RatPolynomial> EtaSeries::etas() const {
  std::vector<RatPolynomial> out(order() + 1);
  for (int n = 1; n <= order(); ++n) out[n] = eta(n);
  return out;
}

namespace {

RatPolynomial rho_power(const Rational& c, int k) { return RatPolynomial::monomial(c, static_cast<std::size_t>(k)); }

/// 1 + z d/dz log(g / (rho z)) = z d/dz log g for g = rho z + O(z^2).
ParamSeries z_ddz_log_of_odd(const ParamSeries& g) {
  const ParamSeries h0 = g.shifted_down(1);
  const RatPolynomial lead = h0[0];
  std::vector<RatPolynomial> h(h0.coefficients().size());
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = exact_divide(h0[k], lead);
  ParamSeries out = series_z_ddz(series_log(ParamSeries(std::move(h), g.var())));
  out[0] = out[0] + RatPolynomial(1);
  return out;
}

void require_order(int order) {
  if (order < 1) throw DomainError("eta series: order must be >= 1");
}

/// Newton coefficient (-1/16)^k C(2k, k).
Rational newton_coefficient(int k) { return pow(Rational(-1, 16), k) * Rational(central_binomial(k)); }

void assert_same(const EtaSeries& a, const EtaSeries& b, const char* what) {
  for (int n = 0; n <= a.order(); ++n)
    if (!(a.generating()[n] == b.generating()[n]))
      throw InternalConsistencyError(std::string(what) + ": generating and ratio forms differ at z^" +
                                     std::to_string(n));
}

ParamSeries ratio_series(int order, const std::function<Rational(int)>& num, const std::function<Rational(int)>& den) {
  ParamSeries a(order), b(order);
  for (int k = 0; 2 * k <= order; ++k) {
    a[2 * k] = rho_power(num(k), 2 * k);
    b[2 * k] = rho_power(den(k), 2 * k);
  }
  return series_mul(a, series_inverse_mul(b));
}

}  // namespace

EtaSeries dirac_eta_generating(int order) {
  require_order(order);
  // 2 arsinh(rho z / 2), one extra term so the quotient by z keeps the order.
  const RationalSeries as = arsinh_series(order + 1);
  ParamSeries g(order + 1);
  for (int k = 1; k <= order + 1; k += 2) g[k] = rho_power(as[k] * pow(Rational(1, 2), k) * Rational(2), k);
  return EtaSeries(EtaOperator::dirac, z_ddz_log_of_odd(g));
}

EtaSeries dirac_eta_ratio(int order) {
  require_order(order);
  EtaSeries ratio(EtaOperator::dirac,
                  ratio_series(order, newton_coefficient, [](int k) { return newton_coefficient(k) / Rational(2 * k + 1); }));
  assert_same(dirac_eta_generating(order), ratio, "dirac eta");
  return ratio;
}

EtaSeries signature_eta_generating(int order) {
  require_order(order);
  ParamSeries g(order + 1);
  for (int k = 1; k <= order + 1; k += 2) g[k] = rho_power(Rational(BigInt(1), BigInt(k)), k);
  return EtaSeries(EtaOperator::signature, z_ddz_log_of_odd(g));
}

EtaSeries signature_eta_ratio(int order) {
  require_order(order);
  EtaSeries ratio(EtaOperator::signature,
                  ratio_series(order, [](int) { return Rational(1); }, [](int k) { return Rational(BigInt(1), BigInt(2 * k + 1)); }));
  assert_same(signature_eta_generating(order), ratio, "signature eta");
  return ratio;
}

RatPolynomial habel_eta(int n) {
  if (n < 1) throw DomainError("habel_eta: n must be >= 1");
  const Rational half_n(BigInt(n), BigInt(2));
  const std::vector<Rational> b = bernoulli_numbers(n);
  // B_l(n/2) = sum_k C(l, k) B_k (n/2)^{l-k}
  std::vector<Rational> half_pow(n + 1);
  half_pow[0] = 1;
  for (int j = 1; j <= n; ++j) half_pow[j] = half_pow[j - 1] * half_n;
  const RatPolynomial binom = binomial_polynomial(half_n - Rational(1), n - 1);
  // res_x[x^{-n} sum_l c_l x^{n-l} binom(x)] = sum_l c_l [x^{l-1}] binom
  Rational acc;
  for (int l = 1; l <= n; ++l) {
    const Rational tail = binom.coeff(l - 1);
    if (tail.is_zero()) continue;
    Rational bl;
    for (int k = 0; k <= l; ++k)
      if (!b[k].is_zero()) bl += Rational(binomial(l, k)) * b[k] * half_pow[l - k];
    acc += bl / Rational(l) * tail;
  }
  const Rational sign = n % 2 == 0 ? Rational(-2) : Rational(2);  // -2 (-1)^n
  return rho_power(sign * acc, n);
}

bool HabelReport::all_agree() const {
  return std::all_of(entries.begin(), entries.end(), [](const HabelEntry& e) { return e.agree; });
}

std::vector<int> HabelReport::disagreements() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (!e.agree) out.push_back(e.n);
  return out;
}

HabelReport verify_habel(int n_max, int workers) {
  if (n_max < 1) throw DomainError("verify_habel: n_max must be >= 1");
  if (workers < 1) throw DomainError("verify_habel: workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const EtaSeries ratio = dirac_eta_ratio(n_max);

  std::vector<HabelEntry> entries(n_max);
  std::atomic<int> next{1};
  auto work = [&] {
    for (int n = next++; n <= n_max; n = next++) {
      HabelEntry e{n, habel_eta(n), ratio.eta(n), false, {}, false};
      e.difference = e.habel - e.ratio;
      e.agree = e.difference.is_zero();
      const Rational scaled = e.difference.coeff(n);
      e.agree_mod_integers = e.difference == RatPolynomial::monomial(scaled, n) && scaled.is_integer();
      entries[n - 1] = std::move(e);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::min(workers, n_max); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {n_max, workers, std::move(entries), secs};
}

}  // namespace genuskit
