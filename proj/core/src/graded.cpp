#include "genuskit/graded.hpp"

#include <algorithm>

namespace genuskit {

// ---- GeneratorTable -------------------------------------------------------------

GeneratorTable::GeneratorTable(std::vector<Generator> gens) {
  for (auto& g : gens) add(std::move(g.name), g.degree);
}

int GeneratorTable::add(std::string name, int degree) {
  if (degree < 1) throw DomainError("generator '" + name + "' must have positive degree");
  if (name.empty()) throw DomainError("generator names must be non-empty");
  for (const auto& g : gens_)
    if (g.name == name) throw DomainError("duplicate generator name '" + name + "'");
  gens_.push_back({std::move(name), degree});
  return static_cast<int>(gens_.size()) - 1;
}

int GeneratorTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

// ---- GradedElement --------------------------------------------------------------

GradedElement::GradedElement(TablePtr table, int degree_bound, int t_bound)
    : table_(std::move(table)), degree_bound_(degree_bound), t_bound_(t_bound) {
  if (!table_) throw DomainError("graded element needs a generator table");
  if (degree_bound < 0 || t_bound < 0) throw DomainError("graded element bounds must be >= 0");
}

GradedElement GradedElement::constant(const GaussPolynomial& c, TablePtr table, int degree_bound, int t_bound) {
  GradedElement a(std::move(table), degree_bound, t_bound);
  a.add_term(Monomial(a.table_->size(), 0), c);
  return a;
}

GradedElement GradedElement::generator(std::string_view name, TablePtr table, int degree_bound, int t_bound) {
  GradedElement a(std::move(table), degree_bound, t_bound);
  Monomial m(a.table_->size(), 0);
  m[a.table_->index_of(name)] = 1;
  a.add_term(m, GaussPolynomial(1));
  return a;
}

int GradedElement::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * (*table_)[i].degree;
  return d;
}

GaussPolynomial GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussPolynomial() : it->second;
}

Monomial GradedElement::monomial(const std::vector<std::string>& names, int* sign) const {
  Monomial m(table_->size(), 0);
  int s = 1;
  for (const auto& name : names) {
    const int idx = table_->index_of(name);
    if ((*table_)[idx].odd()) {
      // moving this odd factor left past the odd factors of higher index
      for (std::size_t j = idx + 1; j < m.size(); ++j)
        if ((*table_)[j].odd() && m[j] % 2 == 1) s = -s;
    }
    ++m[idx];
  }
  if (sign) *sign = s;
  return m;
}

GaussPolynomial GradedElement::truncate_t(const GaussPolynomial& c) const { return c.truncated(t_bound_); }

void GradedElement::add_term(const Monomial& m, const GaussPolynomial& c) {
  if (m.size() != table_->size()) throw MismatchError("monomial does not match the generator table");
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((*table_)[i].odd() && m[i] > 1) return;
  if (degree(m) > degree_bound_) return;
  const GaussPolynomial tc = truncate_t(c);
  if (tc.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, tc);
  if (!inserted) {
    it->second += tc;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedElement GradedElement::homogeneous_part(int r) const {
  GradedElement out(table_, degree_bound_, t_bound_);
  for (const auto& [m, c] : terms_)
    if (degree(m) == r) out.terms_.emplace(m, c);
  return out;
}

int GradedElement::max_t_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, c.degree());
  return d;
}

bool GradedElement::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree(t.first) % 2 == 1; });
}

bool GradedElement::in_positive_degrees_divisible_by_4() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    const int d = degree(t.first);
    return d > 0 && d % 4 == 0;
  });
}

bool GradedElement::has_constant_part() const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree(t.first) == 0; });
}

bool GradedElement::is_time_independent() const { return max_t_degree() <= 0; }

GradedElement GradedElement::t_derivative() const {
  GradedElement out(table_, degree_bound_, t_bound_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.derivative());
  return out;
}

GradedElement GradedElement::t_integral() const {
  GradedElement out(table_, degree_bound_, t_bound_);
  for (const auto& [m, c] : terms_) out.add_term(m, GaussPolynomial(c.integral().evaluate(GaussianRational(1))));
  return out;
}

GradedElement GradedElement::at_t(const Rational& t) const {
  GradedElement out(table_, degree_bound_, t_bound_);
  for (const auto& [m, c] : terms_) out.add_term(m, GaussPolynomial(c.evaluate(GaussianRational(t))));
  return out;
}

GradedElement GradedElement::times_t_power(unsigned k) const {
  GradedElement out(table_, degree_bound_, t_bound_);
  const GaussPolynomial tk = GaussPolynomial::monomial(GaussianRational(1), k);
  for (const auto& [m, c] : terms_) out.add_term(m, c * tk);
  return out;
}

GradedElement GradedElement::with_t_bound(int t_bound) const {
  GradedElement out(table_, degree_bound_, t_bound);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

void GradedElement::check_compatible(const GradedElement& o) const {
  if (degree_bound_ != o.degree_bound_ || t_bound_ != o.t_bound_)
    throw MismatchError("graded elements with different truncation bounds");
  if (table_ != o.table_ && !(*table_ == *o.table_))
    throw MismatchError("graded elements over different generator tables");
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedElement& GradedElement::operator*=(const GaussianRational& s) { return scale(GaussPolynomial(s)); }

GradedElement& GradedElement::scale(const GaussPolynomial& s) {
  std::map<Monomial, GaussPolynomial> old;
  old.swap(terms_);
  for (const auto& [m, c] : old) add_term(m, c * s);
  return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  a.check_compatible(b);
  const GeneratorTable& tab = *a.table_;
  GradedElement out(a.table_, a.degree_bound_, a.t_bound_);
  Monomial m(tab.size());
  for (const auto& [ma, ca] : a.terms_) {
    const int da = a.degree(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (da + a.degree(mb) > a.degree_bound_) continue;
      // Koszul sign: each odd generator of b moves left past the odd
      // generators of a with larger index.
      int sign = 1;
      bool vanishes = false;
      int odd_above = 0;  // odd generators of a with index > i
      for (std::size_t i = tab.size(); i-- > 0;) {
        if (tab[i].odd()) {
          if (ma[i] && mb[i]) {
            vanishes = true;
            break;
          }
          if (mb[i] && odd_above % 2 == 1) sign = -sign;
          if (ma[i]) ++odd_above;
        }
        m[i] = ma[i] + mb[i];
      }
      if (vanishes) continue;
      GaussPolynomial c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  return a.degree_bound_ == b.degree_bound_ && a.t_bound_ == b.t_bound_ &&
         (a.table_ == b.table_ || *a.table_ == *b.table_) && a.terms_ == b.terms_;
}

std::string to_string(const GradedElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*a.table())[i].name;
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const std::string cs = to_string(c, "t");
    if (mono.empty()) out += "(" + cs + ")";
    else out += "(" + cs + ")*" + mono;
  }
  return out;
}

GradedElement geometric_inverse(const GradedElement& a) {
  if (a.has_constant_part()) throw DomainError("geometric_inverse: argument must have no degree-0 part");
  GradedElement result = GradedElement::constant(GaussPolynomial(1), a.table(), a.degree_bound(), a.t_bound());
  GradedElement power = result;
  const GradedElement minus_a = -a;
  // every factor raises the degree, so at most degree_bound + 1 steps
  for (int k = 1; k <= a.degree_bound(); ++k) {
    power = power * minus_a;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

GradedElement i_N_plus_1(const GradedElement& a) {
  GradedElement out(a.table(), a.degree_bound(), a.t_bound());
  for (const auto& [m, c] : a.terms()) {
    const int r = a.degree(m);
    if (r % 2 == 0) throw DomainError("i^{N+1} is only defined on odd forms");
    // i^{r+1} = (-1)^{(r+1)/2} for odd r
    out.add_term(m, ((r + 1) / 2) % 2 == 0 ? c : -c);
  }
  return out;
}

namespace {

void check_etf_inputs(const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi) {
  xi.check_compatible(psi);
  xi.check_compatible(Psi);
  if (!xi.is_odd()) throw DomainError("etf: xi must be an odd form");
  if (!psi.in_positive_degrees_divisible_by_4() || !Psi.in_positive_degrees_divisible_by_4())
    throw DomainError("etf: psi and Psi must live in positive degrees divisible by 4");
  if (!xi.is_time_independent() || !psi.is_time_independent() || !Psi.is_time_independent())
    throw DomainError("etf: initial values must not depend on t");
}

}  // namespace

EtfTriple etf_solution(const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi) {
  check_etf_inputs(xi, psi, Psi);
  const GradedElement a = geometric_inverse(psi.times_t_power(2));  // (1 + t^2 psi)^{-1}
  const GradedElement b = geometric_inverse(Psi.times_t_power(2));  // (1 + t^2 Psi)^{-1}
  const GradedElement sq = (xi * i_N_plus_1(xi)).times_t_power(2);
  return {xi * a * b, psi * a + sq * a * a * b, Psi * b - sq * a * b * b};
}

EtfTriple etf_ode_residual(const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi) {
  const EtfTriple s = etf_solution(xi, psi, Psi);
  const GradedElement two_t = GradedElement::constant(GaussPolynomial::monomial(GaussianRational(2), 1), xi.table(),
                                                      xi.degree_bound(), xi.t_bound());
  const GradedElement sq = s.xi * i_N_plus_1(s.xi);
  EtfTriple r{s.xi.t_derivative() + two_t * s.xi * (s.psi + s.Psi),
              s.psi.t_derivative() + two_t * s.psi * s.psi - two_t * sq,
              s.Psi.t_derivative() + two_t * s.Psi * s.Psi + two_t * sq};
  const int keep = xi.t_bound() - 1;
  return {r.xi.with_t_bound(keep).with_t_bound(xi.t_bound()), r.psi.with_t_bound(keep).with_t_bound(xi.t_bound()),
          r.Psi.with_t_bound(keep).with_t_bound(xi.t_bound())};
}

// ---- permeable transgression ---------------------------------------------------

TablePtr transgression_table() {
  static const TablePtr table = std::make_shared<const GeneratorTable>(
      std::vector<Generator>{{"u", 3}, {"du", 4}});
  return table;
}

namespace {

int transgression_t_bound(int degree_bound) { return std::max(kDefaultTimeBound, degree_bound); }

/// Terms up to du^k with 4k <= bound; requires the series to reach z^{2k}.
void require_series_order(const RationalSeries& g, int degree_bound) {
  if (g.order() < 2 * (degree_bound / 4) + 2)
    throw TruncationError("transgression: series must be known to order 2 * (D / 4) + 2");
}

}  // namespace

GradedElement even_series_of_du(const RationalSeries& g, int degree_bound) {
  if (degree_bound < 4) throw DomainError("transgression: degree bound must be >= 4");
  const TablePtr tab = transgression_table();
  GradedElement out(tab, degree_bound, transgression_t_bound(degree_bound));
  for (int k = 0; 4 * k <= degree_bound && 2 * k <= g.order(); ++k)
    out.add_term({0, static_cast<unsigned>(k)}, GaussPolynomial::monomial(GaussianRational(g[2 * k]), 2 * k));
  return out;
}

GradedElement permeable_transgression_integrand(const Genus& F, int degree_bound) {
  if (degree_bound < 4) throw DomainError("transgression: degree bound must be >= 4");
  require_series_order(F.series(), degree_bound);
  GradedElement out(transgression_table(), degree_bound, transgression_t_bound(degree_bound));
  for (int k = 1; 3 + 4 * (k - 1) <= degree_bound; ++k) {
    const Rational c = F.log_coefficient(k) * Rational(2 * k);
    out.add_term({1, static_cast<unsigned>(k - 1)}, GaussPolynomial::monomial(GaussianRational(c), 2 * k - 1));
  }
  return out;
}

GradedElement permeable_transgression(const Genus& F, int degree_bound) {
  const GradedElement integrand = permeable_transgression_integrand(F, degree_bound);
  return (even_series_of_du(F.series(), degree_bound) * integrand).t_integral();
}

GradedElement exterior_derivative_u(const GradedElement& a) {
  if (a.table() != transgression_table() && !(*a.table() == *transgression_table()))
    throw MismatchError("exterior_derivative_u works on the transgression generators only");
  GradedElement out(a.table(), a.degree_bound(), a.t_bound());
  for (const auto& [m, c] : a.terms())
    if (m[0] == 1) out.add_term({0, m[1] + 1}, c);
  return out;
}

// ---- reduction in the ball-value proof -----------------------------------------

NullReductionWitness null_reduction_check(const Genus& F, int n, int order, const Rational& rho) {
  if (n < 1) throw DomainError("null_reduction_check: n must be >= 1");
  if (order < n + 1) throw TruncationError("null_reduction_check: order must be >= n + 1");
  if (F.order() < order) throw TruncationError("null_reduction_check: series known to lower order than requested");

  const RationalSeries f = F.series().truncated(order);
  const RationalSeries log_f = F.log_series().truncated(order);

  // G(t, z) = g(t rho z) with t kept symbolic.
  auto at_t_rho_z = [&](const RationalSeries& g) {
    ParamSeries out(order);
    Rational rk(1);
    for (int k = 0; k <= order; ++k, rk *= rho) out[k] = RatPolynomial::monomial(g[k] * rk, k);
    return out;
  };
  auto integrate_t = [](const ParamSeries& s) {
    RationalSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) out[k] = s[k].integral().evaluate(Rational(1));
    return out;
  };
  auto d_dt = [](ParamSeries s) {
    for (int k = 0; k <= s.order(); ++k) s[k] = s[k].derivative();
    return s;
  };

  // d/dt(t^2 rho^2 z LF(t rho z)) = (1/z) d/dt (log F)(t rho z); the t-derivative
  // kills the z^0 term, so the quotient by z is exact.
  const ParamSeries ft = at_t_rho_z(f);
  const ParamSeries integrand = d_dt(at_t_rho_z(log_f)).shifted_down(1);
  const RationalSeries inner = integrate_t(series_mul(ft.truncated(order - 1), integrand));
  const RationalSeries f_rho = series_rescale(f, rho);
  const RationalSeries fn_rho = series_pow(f_rho, static_cast<unsigned>(n));

  NullReductionWitness w;
  w.lhs = residue(series_mul(fn_rho.truncated(order - 1), inner), n);
  const RationalSeries fn = series_pow(f, static_cast<unsigned>(n));
  const RationalSeries fn1 = series_mul(fn, f);
  const Rational rho_n = pow(rho, static_cast<unsigned>(n));
  w.rhs = rho_n * residue(fn1 - fn, n + 1);
  w.first = rho_n * residue(fn1, n + 1);
  w.combined = w.first - w.lhs;
  w.ball = rho_n * residue(fn, n + 1);

  // int_0^1 F(tw) d/dt (log F)(tw) dt = F(w) - 1
  ParamSeries ftw(order), logtw(order);
  for (int k = 0; k <= order; ++k) {
    ftw[k] = RatPolynomial::monomial(f[k], k);
    logtw[k] = RatPolynomial::monomial(log_f[k], k);
  }
  const RationalSeries lemma = integrate_t(series_mul(ftw, d_dt(logtw)));
  w.scalar_lemma = lemma == f - RationalSeries::one(order);
  return w;
}

}  // namespace genuskit
