#pragma once

// Exact scalar arithmetic: big rationals, Gaussian rationals and dense
// univariate polynomials, plus the classical special polynomials used by the
// eta-invariant formulas.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genuskit/errors.hpp"

namespace genuskit {

using BigInt = mpz_class;

/// Canonical big rational: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}  // NOLINT
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "a", "-a", "a/b" with decimal integers a, b (b != 0).
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when den = 1 (so zero prints as "0").
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

Rational invert(const Rational& a);
Rational pow(const Rational& base, unsigned exponent);

/// c_n = sum_{i+j=n} a_i b_j for n = 0..t, computed over a common denominator.
std::vector<Rational> truncated_convolution(const std::vector<Rational>& a, const std::vector<Rational>& b, int t);

/// re + im*i over the rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// Inverse of to_string: "re+im*i" with both parts in rational format.
  /// A bare rational is accepted as a real number.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(const Rational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const Rational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

GaussianRational invert(const GaussianRational& a);

/// Dense univariate polynomial over a field K (Rational or GaussianRational).
/// Trailing zeros are stripped, so the zero polynomial has no coefficients and
/// degree() == -1.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(K(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const K& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * x^k
  static Polynomial monomial(const K& c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<K> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coefficients() const { return c_; }
  K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(); }
  const K& leading() const { return c_.back(); }

  K evaluate(const K& x) const {
    K acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

  /// Antiderivative with zero constant term.
  Polynomial integral() const {
    std::vector<K> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] * Rational(1, static_cast<long>(k + 1));
    return Polynomial(std::move(v));
  }

  /// Drop every term of degree > max_degree.
  Polynomial truncated(int max_degree) const {
    if (degree() <= max_degree) return *this;
    if (max_degree < 0) return {};
    return Polynomial(std::vector<K>(c_.begin(), c_.begin() + max_degree + 1));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) { c_.clear(); return *this; }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        v[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

using RatPolynomial = Polynomial<Rational>;
using GaussPolynomial = Polynomial<GaussianRational>;

/// Units of K[x] are the nonzero constants.
template <class K>
Polynomial<K> invert(const Polynomial<K>& a) {
  if (a.degree() != 0) throw DomainError("polynomial is not a unit (must be a nonzero constant)");
  return Polynomial<K>(invert(a.coeff(0)));
}

/// Quotient a / b; throws DomainError unless b divides a exactly.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<K> rem = a.coefficients();
  std::vector<K> quot(a.degree() - b.degree() + 1);
  const K lead_inv = invert(b.leading());
  const auto& bc = b.coefficients();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    K q = rem[k + b.degree()] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
  }
  return Polynomial<K>(std::move(quot));
}

inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }

/// Human-readable rendering, highest degree first: "-1/12 * rho^2 + 1".
/// Coefficients containing '+' (Gaussian rationals) are parenthesized.
template <class K>
std::string to_string(const Polynomial<K>& p, std::string_view var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const K& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (k > 0 && cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += (cs == "-1" ? std::string("-") : cs + " * ");
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

GaussianRational operator*(const Rational& a, const GaussianRational& b);

// ---- special numbers and polynomials ---------------------------------------

BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
BigInt binomial(long n, long k);
/// (2k)! / (k!)^2
BigInt central_binomial(unsigned k);

/// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned n);

/// B_l(x) in the convention t e^{xt}/(e^t - 1) = sum_l B_l(x) t^l / l!,
/// so B_1(x) = x - 1/2.
RatPolynomial bernoulli_polynomial(unsigned l);

/// All of B_0(x)..B_n(x); cheaper than n separate calls.
std::vector<RatPolynomial> bernoulli_polynomials(unsigned n);

/// binom(x + shift, k) = prod_{j<k} (x + shift - j) / k! as a polynomial in x.
RatPolynomial binomial_polynomial(const Rational& shift, unsigned k);

}  // namespace genuskit
