#include "genuskit/genus.hpp"

#include <algorithm>

namespace genuskit {

Rational cp_value(const Genus& seq, int n) {
  if (n < 0) throw DomainError("cp_value: n must be >= 0");
  if (seq.order() < n) throw TruncationError("cp_value: series must be known to order n");
  // F^{n+1} = exp((n+1) log F)
  const RationalSeries power = series_exp(seq.log_series().truncated(n) * Rational(n + 1));
  return residue(power, n + 1);
}

RationalSeries phi_prime(const Genus& seq, int order) {
  if (order < 0) throw DomainError("phi_prime: order must be >= 0");
  if (seq.order() < order) throw TruncationError("phi_prime: series must be known to the requested order");
  const RationalSeries z_over_F = series_inverse_mul(seq.series().truncated(order)).shifted_up(1);
  return series_derivative(series_comp_inverse(z_over_F));
}

BallResidues ball_residues(const Genus& seq, int n) {
  if (n < 1) throw DomainError("ball value: n must be >= 1");
  if (seq.order() < n) throw TruncationError("ball value: series must be known to order n");
  const RationalSeries log_f = seq.log_series().truncated(n);
  const Rational power_form = residue(series_exp(log_f * Rational(n)), n + 1);

  // phi = z * (phi / z) with phi / z = 1 + O(z^2), so for n >= 1 the pole of
  // (log phi)' = 1/z + (log(phi/z))' never reaches the coefficient of z^{n-1}.
  const RationalSeries z_over_F = series_inverse_mul(seq.series().truncated(n)).shifted_up(1);
  const RationalSeries phi = series_comp_inverse(z_over_F);
  const RationalSeries dlog = series_derivative(series_log(phi.shifted_down(1)));
  return {power_form, residue(dlog, n)};
}

RatPolynomial ball_value(const Genus& seq, int n) {
  const BallResidues r = ball_residues(seq, n);
  if (!(r.power_form == r.log_form))
    throw InternalConsistencyError("ball value: residue forms disagree (" + r.power_form.to_string() + " vs " +
                                   r.log_form.to_string() + ")");
  return RatPolynomial::monomial(r.power_form, static_cast<std::size_t>(n));
}

Rational ball_value(const Genus& seq, int n, const Rational& rho) { return ball_value(seq, n).evaluate(rho); }

Genus sequence_from_cp_values(const std::vector<Rational>& values, int order) {
  if (order < 0) throw DomainError("sequence_from_cp_values: order must be >= 0");
  RationalSeries dphi = RationalSeries::one(order);
  for (std::size_t k = 1; k <= values.size() && static_cast<int>(2 * k) <= order; ++k) dphi[2 * k] = values[k - 1];
  const RationalSeries p = series_inverse_mul(dphi);
  const RationalSeries f = series_ode_solve_autonomous(p, order + 1);
  return Genus(series_inverse_mul(f.shifted_down(1)));
}

WeightedPolynomial<Rational> t_coefficient(const WeightedPolynomial<RatPolynomial>& p, int k) {
  return p.map_coefficients<Rational>([k](const RatPolynomial& c) { return c.coeff(static_cast<std::size_t>(k)); });
}

PontryaginPolynomial quantized_pontryagin(int k, int weight_bound) {
  if (k < 0) throw DomainError("quantized_pontryagin: k must be >= 0");
  const MultiplicativeSequence<RatPolynomial> seq(quantized_pontryagin_series(weight_bound / 2));
  return t_coefficient(expand_in_pontryagin(seq, weight_bound), k);
}

PontryaginPolynomial quantized_symmetric(int k, int weight_bound) {
  if (k < 0) throw DomainError("quantized_symmetric: k must be >= 0");
  const MultiplicativeSequence<RatPolynomial> seq(quantized_symmetric_series(weight_bound / 2));
  return t_coefficient(expand_in_pontryagin(seq, weight_bound), k);
}

WeightedPolynomial<Rational> quantized_chern(int k, int weight_bound) {
  if (k < 0) throw DomainError("quantized_chern: k must be >= 0");
  return t_coefficient(expand_in_chern(quantized_chern_series(weight_bound / 2), weight_bound), k);
}

// ---- RootPolynomial -----------------------------------------------------------

RootPolynomial RootPolynomial::constant(const Rational& c, int roots, int max_degree) {
  RootPolynomial r(roots, max_degree);
  r.add_term(Exponents(roots, 0), c);
  return r;
}

RootPolynomial RootPolynomial::root(int j, int roots, int max_degree) {
  if (j < 1 || j > roots) throw DomainError("root index out of range");
  RootPolynomial r(roots, max_degree);
  Exponents e(roots, 0);
  e[j - 1] = 1;
  r.add_term(e, Rational(1));
  return r;
}

void RootPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != m_) throw MismatchError("root exponent vector has the wrong length");
  unsigned deg = 0;
  for (unsigned x : e) deg += x;
  if (c.is_zero() || static_cast<int>(deg) > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RootPolynomial::check_compatible(const RootPolynomial& o) const {
  if (m_ != o.m_ || max_degree_ != o.max_degree_) throw MismatchError("root polynomials from different contexts");
}

RootPolynomial& RootPolynomial::operator+=(const RootPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RootPolynomial& RootPolynomial::operator-=(const RootPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RootPolynomial& RootPolynomial::operator*=(const Rational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b) {
  a.check_compatible(b);
  RootPolynomial out(a.m_, a.max_degree_);
  Exponents e(a.m_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int deg = 0;
      for (int i = 0; i < a.m_; ++i) {
        e[i] = ea[i] + eb[i];
        deg += static_cast<int>(e[i]);
      }
      if (deg <= a.max_degree_) out.add_term(e, ca * cb);
    }
  }
  return out;
}

// ---- ChernRootContext ---------------------------------------------------------

ChernRootContext::ChernRootContext(int root_count, int weight_bound, RootKind kind)
    : m_(root_count), bound_(weight_bound), kind_(kind) {
  if (root_count < 1) throw DomainError("root context needs at least one root");
  if (weight_bound < 0 || weight_bound % unit_weight() != 0)
    throw DomainError("weight bound must be a non-negative multiple of the root weight");
}

RootPolynomial ChernRootContext::elementary(int k) const {
  if (k == 0) return one();
  RootPolynomial e = zero();
  if (k < 0 || k > m_) return e;
  // Sum over k-subsets of the roots.
  std::vector<bool> pick(m_, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponents ex(m_, 0);
    for (int i = 0; i < m_; ++i) ex[i] = pick[i] ? 1 : 0;
    e.add_term(ex, Rational(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return e;
}

RootPolynomial ChernRootContext::series_of_root(int j, const RationalSeries& g) const {
  const int stride = kind_ == RootKind::pontryagin ? 2 : 1;
  if (kind_ == RootKind::pontryagin && !g.is_even())
    throw DomainError("Pontryagin root expressions need an even series");
  if (g.order() < stride * max_degree()) throw TruncationError("series too short for the root context");
  RootPolynomial out = zero();
  for (int k = 0; k <= max_degree(); ++k) {
    Exponents e(m_, 0);
    e[j - 1] = static_cast<unsigned>(k);
    out.add_term(e, g[stride * k]);
  }
  return out;
}

RootPolynomial ChernRootContext::multiplicative(const RationalSeries& F) const {
  RootPolynomial out = one();
  for (int j = 1; j <= m_; ++j) out = out * series_of_root(j, F);
  return out;
}

RootPolynomial ChernRootContext::evaluate(const WeightedPolynomial<Rational>& p) const {
  if (p.unit_weight() != unit_weight()) throw MismatchError("class polynomial and root context use different gradings");
  std::vector<RootPolynomial> e;
  for (int k = 0; k <= max_degree(); ++k) e.push_back(elementary(k));
  RootPolynomial out = zero();
  for (const auto& [ex, c] : p.terms()) {
    RootPolynomial term = RootPolynomial::constant(c, m_, max_degree());
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const int k = static_cast<int>(i) + 1;
      for (unsigned r = 0; r < ex[i]; ++r) term = term * (k <= max_degree() ? e[k] : zero());
    }
    out += term;
  }
  return out;
}

WeightedPolynomial<Rational> ChernRootContext::to_classes(const RootPolynomial& r) const {
  if (r.roots() != m_ || r.max_degree() != max_degree()) throw MismatchError("root polynomial from another context");
  WeightedPolynomial<Rational> out(bound_, unit_weight());
  std::vector<RootPolynomial> e;
  for (int k = 0; k <= m_; ++k) e.push_back(elementary(k));
  RootPolynomial rest = r;
  while (!rest.is_zero()) {
    // The lexicographically largest monomial of a symmetric polynomial has
    // non-increasing exponents a_1 >= ... >= a_m; it is the leading term of
    // prod_k e_k^{a_k - a_{k+1}}.
    const auto& [lead, c] = *rest.terms().rbegin();
    Exponents classes(m_, 0);
    for (int k = 0; k < m_; ++k) {
      const unsigned next = k + 1 < m_ ? lead[k + 1] : 0;
      if (lead[k] < next) throw DomainError("root polynomial is not symmetric");
      classes[k] = lead[k] - next;
    }
    RootPolynomial sub = RootPolynomial::constant(c, m_, max_degree());
    for (int k = 0; k < m_; ++k)
      for (unsigned p = 0; p < classes[k]; ++p) sub = sub * e[k + 1];
    out.add_term(classes, c);
    rest -= sub;
  }
  return out;
}

// ---- splitting-principle identities ----------------------------------------

namespace {

using TauPoly = std::vector<RootPolynomial>;  // coefficient list in tau

TauPoly tau_mul(const TauPoly& a, const TauPoly& b, int max_tau, const ChernRootContext& ctx) {
  TauPoly out(max_tau + 1, ctx.zero());
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= max_tau; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_tau; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Inverse of a tau-series with constant term 1.
TauPoly tau_inverse(const TauPoly& a, int max_tau, const ChernRootContext& ctx) {
  TauPoly b(max_tau + 1, ctx.zero());
  b[0] = ctx.one();
  for (int n = 1; n <= max_tau; ++n) {
    RootPolynomial acc = ctx.zero();
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) acc += a[k] * b[n - k];
    b[n] = acc * Rational(-1);
  }
  return b;
}

void check_identity_args(int m, int d, int weight_bound) {
  if (m < 1) throw DomainError("identity check: m must be >= 1");
  if (d < 0) throw DomainError("identity check: d must be >= 0");
  if (weight_bound < 0 || weight_bound % 4 != 0) throw DomainError("identity check: weight bound must be a multiple of 4");
}

}  // namespace

IdentityWitness ch_exterior_identity_check(int m, int d, int weight_bound) {
  check_identity_args(m, d, weight_bound);
  const ChernRootContext ctx(m, weight_bound);
  const RationalSeries cosh = cosh_series(weight_bound / 2);

  // sum_d tau^d ch Lambda^d = prod_j (1 + tau e^{x_j})(1 + tau e^{-x_j})
  //                         = prod_j (1 + 2 tau cosh x_j + tau^2)
  TauPoly total{ctx.one()};
  for (int j = 1; j <= m; ++j) {
    const TauPoly factor{ctx.one(), ctx.series_of_root(j, cosh) * Rational(2), ctx.one()};
    total = tau_mul(total, factor, d, ctx);
  }
  total.resize(d + 1, ctx.zero());
  PontryaginPolynomial lhs = ctx.to_classes(total[d]);

  PontryaginPolynomial rhs(weight_bound);
  for (int k = 0; k <= d; ++k) {
    const BigInt c = binomial(2L * m - 2L * k, d - k);
    if (c == 0) continue;
    rhs += quantized_pontryagin(k, weight_bound) * Rational(c);
  }
  rhs = rhs.restricted_to(m);
  const bool equal = lhs == rhs;
  return {equal, std::move(lhs), std::move(rhs)};
}

IdentityWitness ch_symmetric_identity_check(int m, int d, int weight_bound) {
  check_identity_args(m, d, weight_bound);
  const ChernRootContext ctx(m, weight_bound);
  const RationalSeries cosh = cosh_series(weight_bound / 2);

  // sum_d tau^d ch Sym^d = prod_j 1 / ((1 - tau e^{x_j})(1 - tau e^{-x_j}))
  TauPoly total{ctx.one()};
  for (int j = 1; j <= m; ++j) {
    const TauPoly factor{ctx.one(), ctx.series_of_root(j, cosh) * Rational(-2), ctx.one()};
    total = tau_mul(total, tau_inverse(factor, d, ctx), d, ctx);
  }
  total.resize(d + 1, ctx.zero());
  PontryaginPolynomial lhs = ctx.to_classes(total[d]);

  PontryaginPolynomial rhs(weight_bound);
  for (int k = 0; k <= d; ++k) {
    const BigInt c = binomial(2L * m + d + k - 1, d - k);
    if (c == 0) continue;
    rhs += quantized_symmetric(k, weight_bound) * Rational(c);
  }
  rhs = rhs.restricted_to(m);
  const bool equal = lhs == rhs;
  return {equal, std::move(lhs), std::move(rhs)};
}

}  // namespace genuskit
