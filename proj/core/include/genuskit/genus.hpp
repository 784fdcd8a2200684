#pragma once

// Multiplicative sequences of Pontryagin (and Chern) classes.
//
// A multiplicative sequence is parametrized by an even series
// F(z) = 1 + O(z^2) with log F(z) = sum_k f_k z^{2k}. Its value on CP^n is
// res[F^{n+1} / z^{n+1}], its integral over a Berger-collared ball is
// rho^n res[F^n / z^{n+1}], and its universal polynomial in the Pontryagin
// variables is exp(Lambda^F log(1 + p_1 + p_2 + ...)), where Lambda^F scales
// the weight-4k part by (-1)^{k-1} k f_k.

#include <map>
#include <string>
#include <vector>

#include "genuskit/arith.hpp"
#include "genuskit/named_series.hpp"
#include "genuskit/series.hpp"
#include "genuskit/weighted_polynomial.hpp"

namespace genuskit {

template <CoefficientRing R>
class MultiplicativeSequence {
 public:
  explicit MultiplicativeSequence(PowerSeries<R> F) : F_(std::move(F)), log_(series_log(check(F_))) {}

  const PowerSeries<R>& series() const { return F_; }
  const PowerSeries<R>& log_series() const { return log_; }
  int order() const { return F_.order(); }

  /// f_k, the coefficient of z^{2k} in log F; f_0 is zero.
  R log_coefficient(int k) const { return 2 * k <= log_.order() ? log_[2 * k] : R(); }
  /// f_0 .. f_{order/2}
  std::vector<R> log_coefficients() const {
    std::vector<R> f(log_.order() / 2 + 1);
    for (std::size_t k = 1; k < f.size(); ++k) f[k] = log_[2 * k];
    return f;
  }

 private:
  static const PowerSeries<R>& check(const PowerSeries<R>& F) {
    if (!(F[0] == R(Rational(1)))) throw DomainError("multiplicative sequence: F(0) must be 1");
    if (!F.is_even()) throw DomainError("multiplicative sequence: F must be even");
    return F;
  }

  PowerSeries<R> F_;
  PowerSeries<R> log_;
};

using Genus = MultiplicativeSequence<Rational>;
using PontryaginPolynomial = WeightedPolynomial<Rational>;

namespace detail {

/// exp(Lambda log(1 + v_1 + v_2 + ...)) with Lambda multiplying the part of
/// degree index k by (-1)^{k-1} k f[k].
template <CoefficientRing R>
WeightedPolynomial<R> expand_multiplicative(const std::vector<R>& f, int weight_bound, int unit_weight) {
  using WP = WeightedPolynomial<R>;
  const int kmax = weight_bound / unit_weight;
  WP x(weight_bound, unit_weight);
  for (int k = 1; k <= kmax; ++k) x += WP::variable(k, weight_bound, unit_weight);

  // log(1 + x) = sum_j (-1)^{j-1} x^j / j, finite since x has weight >= unit.
  WP log_total(weight_bound, unit_weight);
  WP xp = WP::constant(R(Rational(1)), weight_bound, unit_weight);
  for (int j = 1; j <= kmax; ++j) {
    xp *= x;
    log_total += xp * Rational(j % 2 == 1 ? 1 : -1, j);
  }

  const WP y = log_total.graded_scale([&](int k) -> R {
    if (k <= 0 || k >= static_cast<int>(f.size())) return R();
    return f[k] * Rational(k % 2 == 1 ? k : -k);
  });

  WP result = WP::constant(R(Rational(1)), weight_bound, unit_weight);
  WP yp = result;
  for (int j = 1; j <= kmax; ++j) {
    yp *= y;
    yp *= Rational(BigInt(1), BigInt(j));  // accumulates y^j / j!
    result += yp;
  }
  return result;
}

}  // namespace detail

/// Universal polynomial of the sequence in p_1, p_2, ... up to weight W.
template <CoefficientRing R>
WeightedPolynomial<R> expand_in_pontryagin(const MultiplicativeSequence<R>& seq, int weight_bound) {
  if (weight_bound % 4 != 0) throw DomainError("Pontryagin weight bound must be a multiple of 4");
  const int kmax = weight_bound / 4;
  if (seq.order() < 2 * kmax) throw TruncationError("series order too low for the requested weight bound");
  return detail::expand_multiplicative(seq.log_coefficients(), weight_bound, 4);
}

/// Universal polynomial in Chern variables c_k (weight 2k) of the
/// multiplicative sequence det F(-R / 2 pi i) for F(z) = 1 + O(z).
template <CoefficientRing R>
WeightedPolynomial<R> expand_in_chern(const PowerSeries<R>& F, int weight_bound) {
  if (weight_bound % 2 != 0) throw DomainError("Chern weight bound must be even");
  const int kmax = weight_bound / 2;
  if (F.order() < kmax) throw TruncationError("series order too low for the requested weight bound");
  const PowerSeries<R> log_f = series_log(F);
  std::vector<R> f(kmax + 1);
  for (int k = 1; k <= kmax; ++k) f[k] = log_f[k];
  return detail::expand_multiplicative(f, weight_bound, 2);
}

/// <F(T CP^n), [CP^n]> = res[F(z)^{n+1} / z^{n+1} dz].
Rational cp_value(const Genus& seq, int n);

/// phi' for phi the compositional inverse of z / F(z); known to the given order.
RationalSeries phi_prime(const Genus& seq, int order);

/// Both residue forms of the ball integral, as coefficients of rho^n.
struct BallResidues {
  Rational power_form;  ///< res[F^n / z^{n+1}]
  Rational log_form;    ///< res[(log phi)' / z^n]
};
BallResidues ball_residues(const Genus& seq, int n);
/// rho^n res[F^n / z^{n+1}] as a polynomial in rho; throws
/// InternalConsistencyError if the two residue forms disagree.
RatPolynomial ball_value(const Genus& seq, int n);
Rational ball_value(const Genus& seq, int n, const Rational& rho);

/// The sequence whose even CP values are values[0], values[1], ... (values on
/// CP^2, CP^4, ...); entries past the end of the list are taken as zero.
/// Solves f' = 1 / phi'(f), f(0) = 0, and returns F = z / f.
Genus sequence_from_cp_values(const std::vector<Rational>& values, int order);

/// Coefficient of t^k in a weighted polynomial with t-polynomial coefficients.
WeightedPolynomial<Rational> t_coefficient(const WeightedPolynomial<RatPolynomial>& p, int k);

/// P_k: coefficient of t^k in the sequence of P(t, z) = 1 + 2t(cosh z - 1).
PontryaginPolynomial quantized_pontryagin(int k, int weight_bound);
/// S_k: coefficient of t^k in the sequence of S(t, z) = (1 - 2t(cosh z - 1))^{-1}.
PontryaginPolynomial quantized_symmetric(int k, int weight_bound);
/// C_k: coefficient of t^k in the Chern sequence of C(t, z) = 1 + t(e^z - 1).
WeightedPolynomial<Rational> quantized_chern(int k, int weight_bound);

// ---- splitting principle --------------------------------------------------

/// Polynomial in formal root variables y_1..y_m, truncated at a total degree.
/// In the Pontryagin setting y_j = x_j^2 (weight 4), in the Chern setting
/// y_j = x_j (weight 2).
class RootPolynomial {
 public:
  RootPolynomial(int roots, int max_degree) : m_(roots), max_degree_(max_degree) {}

  static RootPolynomial constant(const Rational& c, int roots, int max_degree);
  static RootPolynomial root(int j, int roots, int max_degree);  // y_j, 1-based

  int roots() const { return m_; }
  int max_degree() const { return max_degree_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);

  RootPolynomial& operator+=(const RootPolynomial& o);
  RootPolynomial& operator-=(const RootPolynomial& o);
  RootPolynomial& operator*=(const Rational& s);
  friend RootPolynomial operator+(RootPolynomial a, const RootPolynomial& b) { return a += b; }
  friend RootPolynomial operator-(RootPolynomial a, const RootPolynomial& b) { return a -= b; }
  friend RootPolynomial operator*(RootPolynomial a, const Rational& s) { return a *= s; }
  friend RootPolynomial operator*(const RootPolynomial& a, const RootPolynomial& b);
  friend bool operator==(const RootPolynomial& a, const RootPolynomial& b) {
    return a.m_ == b.m_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const RootPolynomial& o) const;

  int m_;
  int max_degree_;
  std::map<Exponents, Rational> terms_;  // exponent vectors of length m
};

enum class RootKind { pontryagin, chern };

/// Formal roots of a bundle of real rank 2m (Pontryagin: roots +-x_j,
/// p_k = e_k(x_1^2, ..., x_m^2)) or complex rank m (Chern: c_k = e_k(x)).
class ChernRootContext {
 public:
  ChernRootContext(int root_count, int weight_bound, RootKind kind = RootKind::pontryagin);

  int root_count() const { return m_; }
  int weight_bound() const { return bound_; }
  RootKind kind() const { return kind_; }
  /// Weight of one root variable y_j.
  int unit_weight() const { return kind_ == RootKind::pontryagin ? 4 : 2; }
  int max_degree() const { return bound_ / unit_weight(); }

  RootPolynomial zero() const { return RootPolynomial(m_, max_degree()); }
  RootPolynomial one() const { return RootPolynomial::constant(Rational(1), m_, max_degree()); }
  RootPolynomial root(int j) const { return RootPolynomial::root(j, m_, max_degree()); }
  RootPolynomial elementary(int k) const;

  /// g(x_j) for a series g; in the Pontryagin setting g must be even and is
  /// read as a series in y_j = x_j^2.
  RootPolynomial series_of_root(int j, const RationalSeries& g) const;
  /// prod_j F(x_j)
  RootPolynomial multiplicative(const RationalSeries& F) const;

  /// Substitutes v_k -> e_k(y).
  RootPolynomial evaluate(const WeightedPolynomial<Rational>& p) const;
  /// Rewrites a symmetric root polynomial in elementary symmetric functions;
  /// throws DomainError if the input is not symmetric.
  WeightedPolynomial<Rational> to_classes(const RootPolynomial& r) const;

 private:
  int m_;
  int bound_;
  RootKind kind_;
};

/// Outcome of a splitting-principle identity check.
struct IdentityWitness {
  bool equal;
  PontryaginPolynomial lhs;
  PontryaginPolynomial rhs;
};

/// ch Lambda^d V = sum_k C(2m - 2k, d - k) P_k for V of real rank 2m, with the
/// left side computed directly from the roots.
IdentityWitness ch_exterior_identity_check(int m, int d, int weight_bound);
/// ch Sym^d V = sum_k C(2m + d + k - 1, d - k) S_k.
IdentityWitness ch_symmetric_identity_check(int m, int d, int weight_bound);

}  // namespace genuskit
