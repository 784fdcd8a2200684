#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genuskit/errors.hpp"
#include "genuskit/series.hpp"

namespace genuskit {

/// Multi-index (e_1, e_2, ...) over graded variables v_1, v_2, ...; trailing
/// zeros are always stripped so every monomial has a unique key.
using Exponents = std::vector<unsigned>;

/// Polynomial in graded variables v_k of weight unit_weight * k, truncated at a
/// total weight bound. Pontryagin variables p_k use unit weight 4, Chern
/// variables c_k unit weight 2. Terms are kept in lexicographic multi-index
/// order and only nonzero coefficients are stored.
template <CoefficientRing R>
class WeightedPolynomial {
 public:
  WeightedPolynomial(int weight_bound, int unit_weight = 4) : bound_(weight_bound), unit_(unit_weight) {
    if (unit_weight <= 0) throw DomainError("unit weight must be positive");
    if (weight_bound < 0) throw DomainError("weight bound must be >= 0");
  }

  static WeightedPolynomial constant(const R& c, int weight_bound, int unit_weight = 4) {
    WeightedPolynomial p(weight_bound, unit_weight);
    p.add_term({}, c);
    return p;
  }
  /// The variable v_k (k >= 1); zero if its weight exceeds the bound.
  static WeightedPolynomial variable(int k, int weight_bound, int unit_weight = 4) {
    if (k < 1) throw DomainError("variables are indexed from 1");
    WeightedPolynomial p(weight_bound, unit_weight);
    Exponents e(k, 0);
    e[k - 1] = 1;
    p.add_term(e, R(Rational(1)));
    return p;
  }

  int weight_bound() const { return bound_; }
  int unit_weight() const { return unit_; }
  /// Largest variable index that fits under the bound.
  int max_variable() const { return bound_ / unit_; }
  const std::map<Exponents, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int weight(const Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += unit_ * static_cast<int>(i + 1) * static_cast<int>(e[i]);
    return w;
  }

  R coefficient(Exponents e) const {
    normalize(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? R() : it->second;
  }

  /// Adds c * v^e; terms over the weight bound are dropped.
  void add_term(Exponents e, const R& c) {
    normalize(e);
    if (c.is_zero() || weight(e) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeightedPolynomial homogeneous_part(int w) const {
    WeightedPolynomial out(bound_, unit_);
    for (const auto& [e, c] : terms_)
      if (weight(e) == w) out.terms_.emplace(e, c);
    return out;
  }

  /// Drops all terms of weight below w.
  WeightedPolynomial from_weight(int w) const {
    WeightedPolynomial out(bound_, unit_);
    for (const auto& [e, c] : terms_)
      if (weight(e) >= w) out.terms_.emplace(e, c);
    return out;
  }

  /// Sets every variable v_j with j > m to zero.
  WeightedPolynomial restricted_to(int m) const {
    WeightedPolynomial out(bound_, unit_);
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(e.size()) <= m) out.terms_.emplace(e, c);
    return out;
  }

  WeightedPolynomial with_bound(int weight_bound) const {
    WeightedPolynomial out(weight_bound, unit_);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  template <class S, class F>
  WeightedPolynomial<S> map_coefficients(F f) const {
    WeightedPolynomial<S> out(bound_, unit_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Multiplies the homogeneous part of weight unit_weight * k by g(k).
  template <class G>
  WeightedPolynomial graded_scale(G g) const {
    WeightedPolynomial out(bound_, unit_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * g(weight(e) / unit_));
    return out;
  }

  WeightedPolynomial& operator+=(const WeightedPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  WeightedPolynomial& operator-=(const WeightedPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  WeightedPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [e, c] : terms_) c = c * s;
    return *this;
  }

  friend WeightedPolynomial operator+(WeightedPolynomial a, const WeightedPolynomial& b) { return a += b; }
  friend WeightedPolynomial operator-(WeightedPolynomial a, const WeightedPolynomial& b) { return a -= b; }
  friend WeightedPolynomial operator*(WeightedPolynomial a, const Rational& s) { return a *= s; }
  friend WeightedPolynomial operator*(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    a.check_compatible(b);
    WeightedPolynomial out(a.bound_, a.unit_);
    for (const auto& [ea, ca] : a.terms_) {
      const int wa = a.weight(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (wa + a.weight(eb) > a.bound_) continue;
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  WeightedPolynomial& operator*=(const WeightedPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const WeightedPolynomial& a, const WeightedPolynomial& b) {
    return a.bound_ == b.bound_ && a.unit_ == b.unit_ && a.terms_ == b.terms_;
  }

 private:
  static void normalize(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }
  void check_compatible(const WeightedPolynomial& o) const {
    if (bound_ != o.bound_ || unit_ != o.unit_)
      throw MismatchError("weighted polynomials with different weight bounds or grading");
  }

  int bound_;
  int unit_;
  std::map<Exponents, R> terms_;
};

/// Renders "1 + 1/3*p1 + ..." in increasing weight.
template <CoefficientRing R, class CoeffToString>
std::string to_string(const WeightedPolynomial<R>& p, const std::string& var, CoeffToString coeff_str) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, R>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return p.weight(a.first) < p.weight(b.first); });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string cs = coeff_str(c);
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += "(" + cs + ")*" + mono;
  }
  return out;
}

inline std::string to_string(const WeightedPolynomial<Rational>& p, const std::string& var = "p") {
  return to_string(p, var, [](const Rational& c) { return c.to_string(); });
}

}  // namespace genuskit
