#pragma once

// Free graded-commutative algebra on named generators with coefficients that
// are Gaussian-rational polynomials in a time parameter t, truncated at a form
// degree D and a t-degree T_t.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "genuskit/arith.hpp"
#include "genuskit/genus.hpp"

namespace genuskit {

struct Generator {
  std::string name;
  int degree;
  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators in canonical order; names are unique and degrees positive.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<Generator> gens);

  /// Appends a generator and returns its index.
  int add(std::string name, int degree);
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Throws DomainError on an unknown name.
  int index_of(std::string_view name) const;

  friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

 private:
  std::vector<Generator> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;
/// Exponent of each generator in table order; odd generators appear at most once.
using Monomial = std::vector<unsigned>;

inline constexpr int kDefaultDegreeBound = 16;
inline constexpr int kDefaultTimeBound = 12;

class GradedElement {
 public:
  explicit GradedElement(TablePtr table, int degree_bound = kDefaultDegreeBound, int t_bound = kDefaultTimeBound);

  static GradedElement constant(const GaussPolynomial& c, TablePtr table, int degree_bound = kDefaultDegreeBound,
                                int t_bound = kDefaultTimeBound);
  static GradedElement generator(std::string_view name, TablePtr table, int degree_bound = kDefaultDegreeBound,
                                 int t_bound = kDefaultTimeBound);

  const TablePtr& table() const { return table_; }
  int degree_bound() const { return degree_bound_; }
  int t_bound() const { return t_bound_; }
  const std::map<Monomial, GaussPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree(const Monomial& m) const;
  GaussPolynomial coefficient(const Monomial& m) const;
  /// Monomial from generator names, e.g. {"g3", "g4", "g4"}; the sign from
  /// sorting odd names into canonical order is returned through `sign`.
  Monomial monomial(const std::vector<std::string>& names, int* sign = nullptr) const;

  /// Adds c * m, dropping terms over the degree bound, t-powers over the t
  /// bound and monomials with a repeated odd generator.
  void add_term(const Monomial& m, const GaussPolynomial& c);

  GradedElement homogeneous_part(int r) const;
  int max_t_degree() const;
  bool is_odd() const;  ///< every term has odd degree
  /// Every term has positive degree divisible by 4.
  bool in_positive_degrees_divisible_by_4() const;
  bool has_constant_part() const;
  bool is_time_independent() const;

  GradedElement t_derivative() const;
  /// Exact integral over t in [0, 1]; the result is time independent.
  GradedElement t_integral() const;
  GradedElement at_t(const Rational& t) const;
  GradedElement times_t_power(unsigned k) const;
  GradedElement with_t_bound(int t_bound) const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const GaussianRational& s);
  GradedElement& scale(const GaussPolynomial& s);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator-(GradedElement a) { return a *= GaussianRational(Rational(-1)); }
  friend GradedElement operator*(GradedElement a, const GaussianRational& s) { return a *= s; }
  friend GradedElement operator*(GradedElement a, const Rational& s) { return a *= GaussianRational(s); }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend bool operator==(const GradedElement& a, const GradedElement& b);

  void check_compatible(const GradedElement& o) const;

 private:
  GaussPolynomial truncate_t(const GaussPolynomial& c) const;

  TablePtr table_;
  int degree_bound_;
  int t_bound_;
  std::map<Monomial, GaussPolynomial> terms_;
};

/// "(coeff)*g3*g4^2 + ..." with t-polynomial coefficients.
std::string to_string(const GradedElement& a);

/// Koszul-signed product.
inline GradedElement wedge(const GradedElement& a, const GradedElement& b) { return a * b; }

/// (1 + a)^{-1} = sum_k (-a)^k for a without degree-0 part.
GradedElement geometric_inverse(const GradedElement& a);

/// Multiplies each odd term of degree r by i^{r+1}; throws DomainError on even terms.
GradedElement i_N_plus_1(const GradedElement& a);

/// The time-dependent forms (xi^t, psi^t, Psi^t).
struct EtfTriple {
  GradedElement xi;
  GradedElement psi;
  GradedElement Psi;
};

/// Closed forms
///   xi^t  = xi (1 + t^2 psi)^{-1} (1 + t^2 Psi)^{-1}
///   psi^t = psi (1 + t^2 psi)^{-1} + t^2 xi (i^{N+1} xi) (1 + t^2 psi)^{-2} (1 + t^2 Psi)^{-1}
///   Psi^t = Psi (1 + t^2 Psi)^{-1} - t^2 xi (i^{N+1} xi) (1 + t^2 psi)^{-1} (1 + t^2 Psi)^{-2}
/// for time-independent xi odd and psi, Psi in positive degrees divisible by 4.
EtfTriple etf_solution(const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi);

/// d/dt of the closed forms minus the right-hand sides
///   -2t xi^t (psi^t + Psi^t),  -2t psi^t psi^t + 2t xi^t (i^{N+1} xi^t),
///   -2t Psi^t Psi^t - 2t xi^t (i^{N+1} xi^t),
/// reduced modulo t^{T_t} (the derivative of a series truncated at t^{T_t}
/// is only known to that order).
EtfTriple etf_ode_residual(const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi);

// ---- permeable transgression ---------------------------------------------------

/// Generators u (degree 3) and du (degree 4) standing for the normalized
/// 3-form xi and its exterior derivative.
TablePtr transgression_table();

/// d/dt(t^2 u LF(sqrt(t^2 du))) = sum_k 2k f_k t^{2k-1} u du^{k-1}, with LF = log F / z^2.
GradedElement permeable_transgression_integrand(const Genus& F, int degree_bound = kDefaultDegreeBound);
/// int_0^1 F(sqrt(t^2 du)) d/dt(t^2 u LF(sqrt(t^2 du))) dt
GradedElement permeable_transgression(const Genus& F, int degree_bound = kDefaultDegreeBound);
/// F(sqrt(t^2 du)) and (log F)(sqrt(t^2 du)) in the transgression algebra.
GradedElement even_series_of_du(const RationalSeries& g, int degree_bound = kDefaultDegreeBound);
/// The one exterior-derivative step needed here: u du^j -> du^{j+1}, and
/// monomials without u map to zero (d du = 0).
GradedElement exterior_derivative_u(const GradedElement& a);

// ---- reduction in the ball-value proof -----------------------------------------

struct NullReductionWitness {
  Rational lhs;       ///< res[F(rho z)^n (int_0^1 F(t rho z) d/dt(t^2 rho^2 z LF(t rho z)) dt) / z^n]
  Rational rhs;       ///< rho^n res[(F^{n+1} - F^n) / z^{n+1}]
  Rational first;     ///< rho^n res[F^{n+1} / z^{n+1}]
  Rational combined;  ///< first - lhs
  Rational ball;      ///< rho^n res[F^n / z^{n+1}]
  bool scalar_lemma;  ///< int_0^1 F(tw) d/dt (log F)(tw) dt = F(w) - 1 to the given order
  bool passed() const { return lhs == rhs && combined == ball && scalar_lemma; }
};

/// Evaluates the reduction with series whose coefficients are polynomials in t,
/// integrating over t in [0, 1] exactly. Requires order >= n + 1.
NullReductionWitness null_reduction_check(const Genus& F, int n, int order, const Rational& rho = Rational(1));

}  // namespace genuskit
