#pragma once

// Truncated univariate formal power series over an exact commutative ring.
//
// A PowerSeries of truncation order T stores c_0..c_T and represents the
// class of the series modulo z^{T+1}. Every operation returns the order to
// which its result is actually determined by its inputs, so precision is
// never claimed that the inputs cannot back.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "genuskit/arith.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

/// Exact commutative rings usable as series coefficients. Rational scalars act
/// on every ring; units are inverted by an ADL-visible invert().
template <class R>
concept CoefficientRing = std::regular<R> && requires(R a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { invert(b) } -> std::convertible_to<R>;
  R(q);
};

template <CoefficientRing R>
class PowerSeries;

template <CoefficientRing R>
void require_same_var(const PowerSeries<R>& a, const PowerSeries<R>& b);

template <CoefficientRing R>
PowerSeries<R> series_mul(const PowerSeries<R>& a, const PowerSeries<R>& b);

template <CoefficientRing R>
class PowerSeries {
 public:
  using coefficient_type = R;

  /// The zero series of the given order.
  explicit PowerSeries(int order, std::string var = "z") : c_(checked_size(order)), var_(std::move(var)) {}
  PowerSeries(std::vector<R> coeffs, std::string var = "z") : c_(std::move(coeffs)), var_(std::move(var)) {
    if (c_.empty()) throw DomainError("a power series needs at least one coefficient");
  }

  static PowerSeries one(int order, std::string var = "z") {
    PowerSeries s(order, std::move(var));
    s.c_[0] = R(Rational(1));
    return s;
  }
  /// The indeterminate itself; order must be >= 1 to hold it.
  static PowerSeries identity(int order, std::string var = "z") {
    PowerSeries s(order, std::move(var));
    if (order >= 1) s.c_[1] = R(Rational(1));
    return s;
  }
  static PowerSeries constant(const R& c, int order, std::string var = "z") {
    PowerSeries s(order, std::move(var));
    s.c_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::string& var() const { return var_; }
  const std::vector<R>& coefficients() const { return c_; }
  const R& operator[](std::size_t k) const { return c_.at(k); }
  R& operator[](std::size_t k) { return c_.at(k); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x.is_zero(); });
  }
  bool is_even() const {
    for (std::size_t k = 1; k < c_.size(); k += 2)
      if (!c_[k].is_zero()) return false;
    return true;
  }
  bool is_odd() const {
    for (std::size_t k = 0; k < c_.size(); k += 2)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  /// Same series known to a lower order.
  PowerSeries truncated(int order) const {
    if (order > this->order()) throw TruncationError("cannot raise the truncation order of a series");
    return PowerSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1), var_);
  }

  /// Multiply by z^k: the result is determined to order T + k.
  PowerSeries shifted_up(int k) const {
    std::vector<R> v(c_.size() + k);
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return PowerSeries(std::move(v), var_);
  }
  /// Divide by z^k; the low coefficients must vanish.
  PowerSeries shifted_down(int k) const {
    if (k > order()) throw TruncationError("series too short to divide by z^" + std::to_string(k));
    for (int j = 0; j < k; ++j)
      if (!c_[j].is_zero()) throw DomainError("series is not divisible by z^" + std::to_string(k));
    return PowerSeries(std::vector<R>(c_.begin() + k, c_.end()), var_);
  }

  PowerSeries& operator+=(const PowerSeries& o) { return combine(o, [](R& a, const R& b) { a = a + b; }); }
  PowerSeries& operator-=(const PowerSeries& o) { return combine(o, [](R& a, const R& b) { a = a - b; }); }
  PowerSeries& operator*=(const Rational& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }
  PowerSeries& scale(const R& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return series_mul(a, b); }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw DomainError("truncation order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  template <class Op>
  PowerSeries& combine(const PowerSeries& o, Op op) {
    require_same_var(*this, o);
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) op(c_[k], o.c_[k]);
    return *this;
  }

  std::vector<R> c_;
  std::string var_;
};

template <CoefficientRing R>
void require_same_var(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  if (a.var() != b.var())
    throw MismatchError("indeterminate mismatch: '" + a.var() + "' vs '" + b.var() + "'");
}

// ---- arithmetic --------------------------------------------------------------

/// Cauchy product truncated to min(order(a), order(b)).
template <CoefficientRing R>
PowerSeries<R> series_mul(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  require_same_var(a, b);
  const int t = std::min(a.order(), b.order());
  if constexpr (std::is_same_v<R, Rational>) {
    return PowerSeries<R>(truncated_convolution(a.coefficients(), b.coefficients(), t), a.var());
  }
  std::vector<R> v(t + 1);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (int i = 0; i <= t; ++i) {
    if (ac[i].is_zero()) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (bc[j].is_zero()) continue;
      v[i + j] = v[i + j] + ac[i] * bc[j];
    }
  }
  return PowerSeries<R>(std::move(v), a.var());
}

/// a^k by repeated squaring.
template <CoefficientRing R>
PowerSeries<R> series_pow(PowerSeries<R> a, unsigned k) {
  PowerSeries<R> result = PowerSeries<R>::one(a.order(), a.var());
  while (k > 0) {
    if (k & 1U) result = series_mul(result, a);
    k >>= 1U;
    if (k > 0) a = series_mul(a, a);
  }
  return result;
}

/// Multiplicative inverse; c_0 must be a unit of the coefficient ring.
template <CoefficientRing R>
PowerSeries<R> series_inverse_mul(const PowerSeries<R>& a) {
  R c0_inv;
  try {
    c0_inv = invert(a[0]);
  } catch (const DomainError&) {
    throw DomainError("series inverse: constant term is not invertible");
  }
  const int t = a.order();
  const auto& ac = a.coefficients();
  std::vector<R> b(t + 1);
  b[0] = c0_inv;
  for (int n = 1; n <= t; ++n) {
    R acc;
    for (int k = 1; k <= n; ++k) {
      if (ac[k].is_zero() || b[n - k].is_zero()) continue;
      acc = acc + ac[k] * b[n - k];
    }
    b[n] = -(acc * c0_inv);
  }
  return PowerSeries<R>(std::move(b), a.var());
}

/// a / b with the order of the shorter operand.
template <CoefficientRing R>
PowerSeries<R> series_div(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  return series_mul(a, series_inverse_mul(b));
}

/// d/dz; a series known mod z^{T+1} has a derivative known mod z^T.
template <CoefficientRing R>
PowerSeries<R> series_derivative(const PowerSeries<R>& a) {
  if (a.order() == 0) throw TruncationError("derivative of an order-0 series carries no information");
  std::vector<R> v(a.order());
  for (int k = 1; k <= a.order(); ++k) v[k - 1] = a[k] * Rational(k);
  return PowerSeries<R>(std::move(v), a.var());
}

/// Termwise antiderivative with zero constant term; order grows by one.
template <CoefficientRing R>
PowerSeries<R> series_integral(const PowerSeries<R>& a) {
  std::vector<R> v(a.order() + 2);
  for (int k = 0; k <= a.order(); ++k) v[k + 1] = a[k] * Rational(BigInt(1), BigInt(k + 1));
  return PowerSeries<R>(std::move(v), a.var());
}

/// The Euler operator z d/dz: c_k -> k c_k, order preserved.
template <CoefficientRing R>
PowerSeries<R> series_z_ddz(const PowerSeries<R>& a) {
  PowerSeries<R> out = a;
  for (int k = 0; k <= a.order(); ++k) out[k] = a[k] * Rational(k);
  return out;
}

/// log(a) for c_0 = 1, computed as the integral of a'/a.
template <CoefficientRing R>
PowerSeries<R> series_log(const PowerSeries<R>& a) {
  if (!(a[0] == R(Rational(1)))) throw DomainError("series log: constant term must be 1");
  if (a.order() == 0) return PowerSeries<R>(0, a.var());
  // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
  const int t = a.order();
  std::vector<R> l(t + 1);
  for (int n = 1; n <= t; ++n) {
    R acc = a[n] * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (l[k].is_zero() || a[n - k].is_zero()) continue;
      acc = acc - l[k] * a[n - k] * Rational(k);
    }
    l[n] = acc * Rational(BigInt(1), BigInt(n));
  }
  return PowerSeries<R>(std::move(l), a.var());
}

/// exp(a) for c_0 = 0, from e' = a' e.
template <CoefficientRing R>
PowerSeries<R> series_exp(const PowerSeries<R>& a) {
  if (!a[0].is_zero()) throw DomainError("series exp: constant term must be 0");
  const int t = a.order();
  std::vector<R> e(t + 1);
  e[0] = R(Rational(1));
  for (int n = 1; n <= t; ++n) {
    R acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero() || e[n - k].is_zero()) continue;
      acc = acc + a[k] * e[n - k] * Rational(k);
    }
    e[n] = acc * Rational(BigInt(1), BigInt(n));
  }
  return PowerSeries<R>(std::move(e), a.var());
}

/// outer(inner(z)) by truncated Horner; inner must have zero constant term.
/// The result is known to min(order(outer), order(inner)).
template <CoefficientRing R>
PowerSeries<R> series_compose(const PowerSeries<R>& outer, const PowerSeries<R>& inner) {
  if (!inner[0].is_zero()) throw DomainError("series compose: inner series must have zero constant term");
  const int t = std::min(outer.order(), inner.order());
  const PowerSeries<R> in = inner.truncated(t);
  PowerSeries<R> acc = PowerSeries<R>::constant(outer[t], t, inner.var());
  for (int k = t - 1; k >= 0; --k) {
    acc = series_mul(acc, in);
    acc[0] = acc[0] + outer[k];
  }
  return acc;
}

/// a(lambda z) for a ring element lambda.
template <CoefficientRing R>
PowerSeries<R> series_rescale(const PowerSeries<R>& a, const R& lambda) {
  PowerSeries<R> out = a;
  R p = R(Rational(1));
  for (int k = 1; k <= a.order(); ++k) {
    p = p * lambda;
    out[k] = a[k] * p;
  }
  return out;
}

namespace detail {

template <CoefficientRing R>
void require_invertible_linear_term(const PowerSeries<R>& a) {
  if (a.order() < 1) throw TruncationError("compositional inverse needs order >= 1");
  if (!a[0].is_zero()) throw DomainError("compositional inverse: constant term must be 0");
  try {
    (void)invert(a[1]);
  } catch (const DomainError&) {
    throw DomainError("compositional inverse: linear coefficient is not invertible");
  }
}

}  // namespace detail

/// Compositional inverse by Lagrange inversion:
/// [z^n] phi = (1/n) [z^{n-1}] (z / a(z))^n.
template <CoefficientRing R>
PowerSeries<R> series_comp_inverse_lagrange(const PowerSeries<R>& a) {
  detail::require_invertible_linear_term(a);
  const int t = a.order();
  // z / a(z) is known to order t - 1.
  const PowerSeries<R> h = series_inverse_mul(a.shifted_down(1));
  std::vector<R> phi(t + 1);
  PowerSeries<R> hp = PowerSeries<R>::one(t - 1, a.var());
  for (int n = 1; n <= t; ++n) {
    hp = series_mul(hp, h);
    phi[n] = hp[n - 1] * Rational(BigInt(1), BigInt(n));
  }
  return PowerSeries<R>(std::move(phi), a.var());
}

/// Compositional inverse by Newton iteration phi <- phi - (a(phi) - z) / a'(phi),
/// doubling the number of correct coefficients per step.
template <CoefficientRing R>
PowerSeries<R> series_comp_inverse_newton(const PowerSeries<R>& a) {
  detail::require_invertible_linear_term(a);
  const int t = a.order();
  const PowerSeries<R> da = series_derivative(a);  // order t - 1
  PowerSeries<R> phi(1, a.var());
  phi[1] = invert(a[1]);
  int prec = 1;  // phi correct mod z^{prec+1}
  while (prec < t) {
    const int next = std::min(2 * prec + 1, t);
    PowerSeries<R> p(next, a.var());
    for (int k = 0; k <= prec; ++k) p[k] = phi[k];
    PowerSeries<R> residual = series_compose(a.truncated(next), p);
    residual[1] = residual[1] - R(Rational(1));
    const PowerSeries<R> slope = series_compose(da.truncated(next - 1), p.truncated(next - 1));
    // residual = O(z^{prec+1}): divide that power out so the quotient only
    // uses coefficients of 1/slope that are actually known.
    const PowerSeries<R> step =
        series_mul(residual.shifted_down(prec + 1), series_inverse_mul(slope)).shifted_up(prec + 1);
    p -= step;
    phi = std::move(p);
    prec = next;
  }
  return phi.truncated(t);
}

/// Default compositional inverse (Lagrange). Both routes are public so tests can
/// cross-check them.
template <CoefficientRing R>
PowerSeries<R> series_comp_inverse(const PowerSeries<R>& a) {
  return series_comp_inverse_lagrange(a);
}

/// res_{z=0}[a(z) / z^pole_order dz] = c_{pole_order - 1}.
template <CoefficientRing R>
R residue(const PowerSeries<R>& a, int pole_order) {
  if (pole_order < 1) return R();
  if (a.order() < pole_order - 1)
    throw TruncationError("residue needs order >= " + std::to_string(pole_order - 1) + ", series has order " +
                          std::to_string(a.order()));
  return a[pole_order - 1];
}

/// The unique f = c_1 z + ... with f' = p(f), f(0) = 0, by matching
/// coefficients degree by degree: (n+1) f_{n+1} = [z^n] p(f).
template <CoefficientRing R>
PowerSeries<R> series_ode_solve_autonomous(const PowerSeries<R>& p, int order) {
  if (order < 1) throw DomainError("ode solve: order must be >= 1");
  try {
    (void)invert(p[0]);
  } catch (const DomainError&) {
    throw DomainError("ode solve: p(0) must be invertible");
  }
  if (p.order() < order - 1) throw TruncationError("ode solve: p must be known to order - 1");
  PowerSeries<R> f(order, p.var());
  for (int n = 0; n < order; ++n) {
    // [z^n] p(f) depends on f_1..f_n only.
    R rhs;
    if (n == 0) {
      rhs = p[0];
    } else {
      PowerSeries<R> fn(n, p.var());
      for (int k = 1; k <= n; ++k) fn[k] = f[k];
      rhs = series_compose(p.truncated(n), fn)[n];
    }
    f[n + 1] = rhs * Rational(BigInt(1), BigInt(n + 1));
  }
  return f;
}

}  // namespace genuskit
