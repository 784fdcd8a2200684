// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; the tolerance below is the largest admissible |difference|.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "genuskit/eta.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/graded.hpp"
#include "graded_support.hpp"

using namespace genuskit;
using namespace genuskit::testing;

namespace {

const Rational kTolerance(0);

bool close(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return !((d.sign() < 0 ? -d : d) > kTolerance);
}

bool close(const RatPolynomial& a, const RatPolynomial& b) {
  const RatPolynomial d = a - b;
  for (int k = 0; k <= d.degree(); ++k)
    if (!close(d.coeff(k), Rational(0))) return false;
  return true;
}

bool close(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (!close(a[k], b[k])) return false;
  return true;
}

bool close(const WeightedPolynomial<Rational>& a, const WeightedPolynomial<Rational>& b) {
  const WeightedPolynomial<Rational> d = a - b;
  for (const auto& [e, c] : d.terms())
    if (!close(c, Rational(0))) return false;
  return true;
}

std::string str(const Rational& r) { return r.to_string(); }

/// [z^k] of s^p by repeated multiplication.
Rational power_coefficient(const RationalSeries& s, int p, int k) {
  RationalSeries acc = RationalSeries::one(s.order());
  for (int i = 0; i < p; ++i) acc = series_mul(acc, s);
  return acc[k];
}

int workers() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

// Each criterion returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

std::string habel_range(int lo, int hi) {
  const HabelReport report = verify_habel(hi, workers());
  for (const HabelEntry& e : report.entries) {
    if (e.n < lo) continue;
    if (!e.agree || !close(e.habel, e.ratio) || !e.difference.is_zero())
      return "n=" + std::to_string(e.n) + ": " + to_string(e.habel, "rho") + " vs " + to_string(e.ratio, "rho");
  }
  return "";
}

std::string ahat_cp_values() {
  const Genus ahat(ahat_series(100));
  for (unsigned k = 1; k <= 50; ++k) {
    BigInt central;
    mpz_bin_uiui(central.get_mpz_t(), 2 * k, k);
    const Rational expected = pow(Rational(-1, 16), k) * Rational(central);
    const Rational got = cp_value(ahat, static_cast<int>(2 * k));
    if (!close(got, expected)) return "k=" + std::to_string(k) + ": " + str(got) + " vs " + str(expected);
  }
  return "";
}

std::string l_cp_values() {
  const Genus l(l_genus_series(100));
  for (int n = 0; n <= 100; ++n) {
    const Rational got = cp_value(l, n);
    if (!close(got, Rational(n % 2 == 0 ? 1 : 0))) return "n=" + std::to_string(n) + ": " + str(got);
  }
  return "";
}

std::string residue_identity() {
  constexpr int kOrder = 40;
  for (int trial = 0; trial < 25; ++trial) {
    const RationalSeries F = random_even_series(kOrder, 100);
    const Genus seq(F);
    // phi = inverse of z / F by Newton iteration; log form as [z^n] phi' / (phi / z).
    const RationalSeries phi = series_comp_inverse_newton(series_inverse_mul(F).shifted_up(1));
    const RationalSeries dlog = series_div(series_derivative(phi), phi.shifted_down(1).truncated(kOrder - 1));
    for (int n = 1; n <= 18; ++n) {
      const BallResidues r = ball_residues(seq, n);
      const Rational power = power_coefficient(F, n, n);
      if (!close(r.power_form, power) || !close(r.log_form, dlog[n]) || !close(r.power_form, r.log_form))
        return "trial " + std::to_string(trial) + " n=" + std::to_string(n);
    }
  }
  return "";
}

std::string comp_inverse() {
  for (int trial = 0; trial < 25; ++trial) {
    const RationalSeries a = random_invertible_series(60, 100);
    if (!close(series_comp_inverse_lagrange(a), series_comp_inverse_newton(a)))
      return "trial " + std::to_string(trial);
  }
  const RationalSeries inv = series_comp_inverse(tanh_series(60));
  for (int k = 0; k <= 60; ++k) {
    const Rational expected = k % 2 == 1 ? Rational(1, k) : Rational(0);
    if (!close(inv[k], expected)) return "tanh inverse at z^" + std::to_string(k) + ": " + str(inv[k]);
  }
  if (!close(inv[1], Rational(1)) || !close(inv[3], Rational(1, 3)) || !close(inv[5], Rational(1, 5)) ||
      !close(inv[7], Rational(1, 7)))
    return "tanh inverse leading coefficients";
  return "";
}

/// Residual of the ODE system recomputed from the closed forms, with the
/// derivative compared modulo t^{T_t}.
std::string etf_config(const std::string& name, const GradedElement& xi, const GradedElement& psi,
                       const GradedElement& Psi) {
  const EtfTriple s = etf_solution(xi, psi, Psi);
  const int keep = xi.t_bound() - 1;
  const GradedElement t = GradedElement::constant(GaussPolynomial::monomial(GaussianRational(1), 1), xi.table(),
                                                  xi.degree_bound(), xi.t_bound());
  const GradedElement m2t = t * Rational(-2);
  const GradedElement q = s.xi * i_N_plus_1(s.xi);
  const GradedElement rx = s.xi.t_derivative() - m2t * s.xi * (s.psi + s.Psi);
  const GradedElement rp = s.psi.t_derivative() - (m2t * s.psi * s.psi - m2t * q);
  const GradedElement rP = s.Psi.t_derivative() - (m2t * s.Psi * s.Psi + m2t * q);
  if (!rx.with_t_bound(keep).is_zero() || !rp.with_t_bound(keep).is_zero() || !rP.with_t_bound(keep).is_zero())
    return name + ": nonzero residual";
  const EtfTriple lib = etf_ode_residual(xi, psi, Psi);
  if (!lib.xi.is_zero() || !lib.psi.is_zero() || !lib.Psi.is_zero()) return name + ": library residual nonzero";
  if (!(s.xi.at_t(Rational(0)) == xi) || !(s.psi.at_t(Rational(0)) == psi) || !(s.Psi.at_t(Rational(0)) == Psi))
    return name + ": wrong initial value";
  return "";
}

std::string etf_residuals() {
  constexpr int D = 16, T = 12;
  auto make = [](std::vector<Generator> g) { return std::make_shared<const GeneratorTable>(std::move(g)); };
  {
    const TablePtr tab = make({{"g3", 3}});
    const auto r = etf_config("xi=g3", GradedElement::generator("g3", tab, D, T), GradedElement(tab, D, T),
                              GradedElement(tab, D, T));
    if (!r.empty()) return r;
  }
  {
    const TablePtr tab = make({{"g3", 3}, {"g4", 4}});
    const auto r = etf_config("xi=g3 Psi=g4", GradedElement::generator("g3", tab, D, T), GradedElement(tab, D, T),
                              GradedElement::generator("g4", tab, D, T));
    if (!r.empty()) return r;
  }
  {
    const TablePtr tab = make({{"g3", 3}, {"g5", 5}, {"g4", 4}, {"g4'", 4}});
    auto g = [&](const char* n) { return GradedElement::generator(n, tab, D, T); };
    const auto r = etf_config("xi=g3+g5 psi=g4 Psi=g4'", g("g3") + g("g5"), g("g4"), g("g4'"));
    if (!r.empty()) return r;
  }
  for (int trial = 0; trial < 10; ++trial) {
    const TablePtr tab = random_table();
    const auto r = etf_config("random " + std::to_string(trial), random_odd(tab, D), random_deg4(tab, D),
                              random_deg4(tab, D));
    if (!r.empty()) return r;
  }
  return "";
}

std::string null_reduction() {
  constexpr int kOrder = 24;
  std::vector<std::pair<std::string, RationalSeries>> cases{{"l", l_genus_series(kOrder)},
                                                            {"ahat", ahat_series(kOrder)}};
  for (int trial = 0; trial < 10; ++trial) cases.emplace_back("random " + std::to_string(trial),
                                                              random_even_series(kOrder, 100));
  for (const auto& [name, F] : cases) {
    const Genus seq(F);
    for (const Rational& rho : {Rational(1), Rational(2, 3)}) {
      for (int n = 1; n <= 10; ++n) {
        const NullReductionWitness w = null_reduction_check(seq, n, kOrder, rho);
        const Rational rn = pow(rho, static_cast<unsigned>(n));
        const Rational first = rn * power_coefficient(F, n + 1, n);
        const Rational ball = rn * power_coefficient(F, n, n);
        if (!w.passed() || !w.scalar_lemma || !close(w.rhs, first - ball) || !close(w.first, first) ||
            !close(w.ball, ball) || !close(w.lhs, w.rhs))
          return name + " n=" + std::to_string(n) + " rho=" + str(rho);
      }
    }
  }
  return "";
}

std::string splitting_identities() {
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d) {
      const IdentityWitness w = ch_exterior_identity_check(m, d, 12);
      if (!w.equal || !close(w.lhs, w.rhs))
        return "exterior m=" + std::to_string(m) + " d=" + std::to_string(d);
    }
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 3; ++d) {
      const IdentityWitness w = ch_symmetric_identity_check(m, d, 12);
      if (!w.equal || !close(w.lhs, w.rhs))
        return "symmetric m=" + std::to_string(m) + " d=" + std::to_string(d);
    }
  return "";
}

std::string quantized_leading_terms() {
  for (int k = 1; k <= 3; ++k) {
    const int W = 4 * k + 4;
    using WP = WeightedPolynomial<Rational>;
    const WP expected = WP::variable(k, W) + (WP::variable(1, W) * WP::variable(k, W) -
                                              WP::variable(k + 1, W) * Rational(k + 1)) *
                                                 Rational(1, 12);
    const WP got = quantized_pontryagin(k, W);
    if (!close(got, expected)) return "k=" + std::to_string(k) + ": " + to_string(got);
  }
  return "";
}

std::string eta_cross_forms() {
  constexpr int kOrder = 60;
  const EtaSeries dg = dirac_eta_generating(kOrder), dr = dirac_eta_ratio(kOrder);
  const EtaSeries sg = signature_eta_generating(kOrder), sr = signature_eta_ratio(kOrder);
  for (int n = 1; n <= kOrder; ++n) {
    for (const auto* pair : {&dg, &sg}) {
      const EtaSeries& g = *pair;
      const EtaSeries& r = pair == &dg ? dr : sr;
      const RatPolynomial e = g.eta(n);
      if (!close(e, r.eta(n))) return to_string(g.op()) + " n=" + std::to_string(n) + ": forms differ";
      if (n % 2 == 1 && !e.is_zero()) return to_string(g.op()) + " n=" + std::to_string(n) + ": odd term";
      for (int k = 0; k <= e.degree(); ++k)
        if (k != n && !e.coeff(k).is_zero())
          return to_string(g.op()) + " n=" + std::to_string(n) + ": not homogeneous";
    }
  }
  if (!close(sg.eta(2), RatPolynomial::monomial(Rational(2, 3), 2))) return "signature eta_2";
  return "";
}

std::string cp_roundtrip() {
  constexpr int kOrder = 40;
  for (const RationalSeries& F : {l_genus_series(kOrder), ahat_series(kOrder)}) {
    const Genus seq(F);
    std::vector<Rational> values;
    for (int n = 2; n <= kOrder; n += 2) values.push_back(cp_value(seq, n));
    if (!close(sequence_from_cp_values(values, kOrder).series(), F)) return "series not recovered";
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Check run;
  };
  const std::vector<Criterion> criteria{
      {1, "Habel closed form equals ratio form, n = 1..200", [] { return habel_range(1, 200); }},
      {2, "Habel closed form equals ratio form, n = 3..16", [] { return habel_range(3, 16); }},
      {3, "A-hat values on CP^{2k}, k = 1..50", ahat_cp_values},
      {4, "L values on CP^n, n <= 100", l_cp_values},
      {5, "ball residue forms agree, 25 random F, order 40, n <= 18", residue_identity},
      {6, "Lagrange and Newton inverses agree, order 60; tanh inverse", comp_inverse},
      {7, "etf ODE residuals vanish, 3 named + 10 random, D=16 T=12", etf_residuals},
      {8, "null reduction for L, A-hat, 10 random F, n <= 10, order 24", null_reduction},
      {9, "ch exterior (m,d <= 4) and symmetric (m,d <= 3) identities, weight 12", splitting_identities},
      {10, "quantized Pontryagin leading terms, k = 1..3", quantized_leading_terms},
      {11, "eta generating and ratio forms agree to order 60", eta_cross_forms},
      {12, "CP values round trip for L and A-hat, order 40", cp_roundtrip},
  };

  std::printf("tolerance: |difference| <= %s (exact)\n", kTolerance.to_string().c_str());
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d  %s  (%.2fs)%s%s\n", failure.empty() ? "PASS" : "FAIL", c.id, c.title, secs,
                failure.empty() ? "" : "  ", failure.c_str());
    std::fflush(stdout);
    failed += failure.empty() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
