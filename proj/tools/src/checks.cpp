#include "genuskit_cli/checks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "genuskit/errors.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/graded.hpp"
#include "genuskit/named_series.hpp"

namespace genuskit::cli {

namespace {

using Task = std::function<CheckCase()>;

std::vector<CheckCase> run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<CheckCase> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::mt19937_64 trial_engine(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& eng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  const int p = num(eng);
  return Rational(BigInt(p), BigInt(den(eng)));
}

RationalSeries random_even_series(std::mt19937_64& eng, int order, int bound) {
  RationalSeries s = RationalSeries::one(order);
  for (int k = 2; k <= order; k += 2) s[k] = random_rational(eng, bound);
  return s;
}

int positive(std::optional<int> v, int fallback, const char* what) {
  const int x = v.value_or(fallback);
  if (x < 1) throw DomainError(std::string("check: ") + what + " must be positive");
  return x;
}

int non_negative(std::optional<int> v, int fallback, const char* what) {
  const int x = v.value_or(fallback);
  if (x < 0) throw DomainError(std::string("check: ") + what + " must be non-negative");
  return x;
}

std::vector<Task> mult_identity(const CheckOptions& o) {
  const int trials = positive(o.trials, 25, "trials");
  const int order = positive(o.order, 40, "order");
  const int max_n = positive(o.max_n, 18, "max-n");
  if (order < max_n) throw TruncationError("check mult-identity: order must be >= max-n");
  std::vector<Task> tasks;
  for (int t = 0; t < trials; ++t)
    tasks.push_back([=, seed = o.seed] {
      auto eng = trial_engine(seed, t);
      const Genus F(random_even_series(eng, order, 100));
      for (int n = 1; n <= max_n; ++n) {
        const BallResidues r = ball_residues(F, n);
        if (!(r.power_form == r.log_form))
          return CheckCase{"trial " + std::to_string(t), false,
                           "n=" + std::to_string(n) + ": " + r.power_form.to_string() + " vs " + r.log_form.to_string()};
      }
      return CheckCase{"trial " + std::to_string(t), true, "n<=" + std::to_string(max_n)};
    });
  return tasks;
}

std::vector<Task> comp_inverse(const CheckOptions& o) {
  const int trials = positive(o.trials, 25, "trials");
  const int order = positive(o.order, 60, "order");
  std::vector<Task> tasks;
  tasks.push_back([=] {
    const bool ok = series_comp_inverse(tanh_series(order)) == artanh_series(order);
    return CheckCase{"tanh", ok, "inverse of tanh is artanh"};
  });
  for (int t = 0; t < trials; ++t)
    tasks.push_back([=, seed = o.seed] {
      auto eng = trial_engine(seed, t);
      RationalSeries a(order);
      do a[1] = random_rational(eng, 100);
      while (a[1].is_zero());
      for (int k = 2; k <= order; ++k) a[k] = random_rational(eng, 100);
      const bool ok = series_comp_inverse_lagrange(a) == series_comp_inverse_newton(a);
      return CheckCase{"trial " + std::to_string(t), ok, ok ? "lagrange == newton" : "lagrange != newton"};
    });
  return tasks;
}

CheckCase etf_case(std::string name, const GradedElement& xi, const GradedElement& psi, const GradedElement& Psi) {
  const EtfTriple r = etf_ode_residual(xi, psi, Psi);
  const bool ok = r.xi.is_zero() && r.psi.is_zero() && r.Psi.is_zero();
  return {std::move(name), ok, ok ? "residual 0" : "nonzero residual"};
}

std::vector<Task> etf_ode(const CheckOptions& o) {
  const int trials = non_negative(o.trials, 10, "trials");
  const int D = positive(o.degree_bound, kDefaultDegreeBound, "degree");
  const int T = positive(o.t_bound, kDefaultTimeBound, "t-degree");
  std::vector<Task> tasks;
  tasks.push_back([=] {
    auto tab = std::make_shared<GeneratorTable>(std::vector<Generator>{{"g3", 3}});
    return etf_case("xi=g3", GradedElement::generator("g3", tab, D, T), GradedElement(tab, D, T),
                    GradedElement(tab, D, T));
  });
  tasks.push_back([=] {
    auto tab = std::make_shared<GeneratorTable>(std::vector<Generator>{{"g3", 3}, {"g4", 4}});
    return etf_case("xi=g3 Psi=g4", GradedElement::generator("g3", tab, D, T), GradedElement(tab, D, T),
                    GradedElement::generator("g4", tab, D, T));
  });
  tasks.push_back([=] {
    auto tab = std::make_shared<GeneratorTable>(
        std::vector<Generator>{{"g3", 3}, {"g5", 5}, {"g4", 4}, {"g4'", 4}});
    const auto g = [&](const char* n) { return GradedElement::generator(n, tab, D, T); };
    return etf_case("xi=g3+g5 psi=g4 Psi=g4'", g("g3") + g("g5"), g("g4"), g("g4'"));
  });
  for (int t = 0; t < trials; ++t)
    tasks.push_back([=, seed = o.seed] {
      auto eng = trial_engine(seed, t);
      std::bernoulli_distribution coin(0.5);
      auto tab = std::make_shared<GeneratorTable>();
      tab->add("g3", 3);
      if (coin(eng)) tab->add("g5", 5);
      if (coin(eng)) tab->add("g7", 7);
      tab->add("g4", 4);
      if (coin(eng)) tab->add("g4b", 4);
      if (coin(eng)) tab->add("g8", 8);
      const TablePtr table = tab;

      // Dense random elements over all monomials of admissible degree.
      auto random_element = [&](auto keep) {
        GradedElement a(table, D, T);
        std::vector<Monomial> todo{Monomial(table->size(), 0)};
        while (!todo.empty()) {
          Monomial m = todo.back();
          todo.pop_back();
          const int deg = a.degree(m);
          if (keep(deg) && coin(eng))
            a.add_term(m, GaussPolynomial(GaussianRational(random_rational(eng, 9), random_rational(eng, 9))));
          // Enumerate each monomial once by only raising exponents at or after the last nonzero slot.
          std::size_t start = 0;
          for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) start = i;
          for (std::size_t i = start; i < m.size(); ++i) {
            const Generator& g = (*table)[i];
            if (deg + g.degree > D || (g.odd() && m[i] > 0)) continue;
            Monomial next = m;
            ++next[i];
            todo.push_back(next);
          }
        }
        return a;
      };
      const GradedElement xi = random_element([](int d) { return d % 2 == 1; });
      const GradedElement psi = random_element([](int d) { return d > 0 && d % 4 == 0; });
      const GradedElement Psi = random_element([](int d) { return d > 0 && d % 4 == 0; });
      return etf_case("trial " + std::to_string(t), xi, psi, Psi);
    });
  return tasks;
}

CheckCase null_case(std::string name, const Genus& F, int max_n, int order, const Rational& rho) {
  for (int n = 1; n <= max_n; ++n) {
    const NullReductionWitness w = null_reduction_check(F, n, order, rho);
    if (!w.passed())
      return {std::move(name), false,
              "n=" + std::to_string(n) + ": lhs " + w.lhs.to_string() + " rhs " + w.rhs.to_string() + " scalar " +
                  (w.scalar_lemma ? "ok" : "fail")};
  }
  return {std::move(name), true, "n<=" + std::to_string(max_n)};
}

std::vector<Task> null_reduction(const CheckOptions& o) {
  const int trials = non_negative(o.trials, 10, "trials");
  const int order = positive(o.order, 24, "order");
  const int max_n = positive(o.max_n, 10, "max-n");
  if (order < max_n + 1) throw TruncationError("check null-reduction: order must be >= max-n + 1");
  const Rational rho = o.rho.value_or(Rational(1));
  std::vector<Task> tasks;
  tasks.push_back([=] { return null_case("l", Genus(l_genus_series(order)), max_n, order, rho); });
  tasks.push_back([=] { return null_case("ahat", Genus(ahat_series(order)), max_n, order, rho); });
  for (int t = 0; t < trials; ++t)
    tasks.push_back([=, seed = o.seed] {
      auto eng = trial_engine(seed, t);
      return null_case("trial " + std::to_string(t), Genus(random_even_series(eng, order, 100)), max_n, order, rho);
    });
  return tasks;
}

std::vector<Task> ch_identity(const CheckOptions& o, bool exterior) {
  const int max_m = positive(o.max_m, exterior ? 4 : 3, "max-m");
  const int max_d = non_negative(o.max_d, exterior ? 4 : 3, "max-d");
  const int weight = positive(o.weight, 12, "weight");
  if (weight % 4 != 0) throw DomainError("check: weight must be a multiple of 4");
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m)
    for (int d = 0; d <= max_d; ++d)
      tasks.push_back([=] {
        const IdentityWitness w =
            exterior ? ch_exterior_identity_check(m, d, weight) : ch_symmetric_identity_check(m, d, weight);
        return CheckCase{"m=" + std::to_string(m) + " d=" + std::to_string(d), w.equal,
                         w.equal ? to_string(w.lhs) : to_string(w.lhs) + " vs " + to_string(w.rhs)};
      });
  return tasks;
}

std::vector<Task> cp_roundtrip(const CheckOptions& o) {
  const int order = positive(o.order, 40, "order");
  std::vector<Task> tasks;
  for (const char* name : {"l", "ahat"})
    tasks.push_back([=] {
      const Genus F(named_series(name, order));
      std::vector<Rational> values;
      for (int n = 2; n <= order; n += 2) values.push_back(cp_value(F, n));
      const bool ok = sequence_from_cp_values(values, order).series() == F.series();
      return CheckCase{name, ok, ok ? "recovered to order " + std::to_string(order) : "series differ"};
    });
  return tasks;
}

}  // namespace

std::vector<std::string> check_suite_names() {
  return {"mult-identity", "comp-inverse", "etf-ode", "null-reduction", "ch-exterior", "ch-symmetric", "cp-roundtrip"};
}

std::vector<CheckCase> run_check_suite(std::string_view suite, const CheckOptions& options) {
  std::vector<Task> tasks;
  if (suite == "mult-identity") tasks = mult_identity(options);
  else if (suite == "comp-inverse") tasks = comp_inverse(options);
  else if (suite == "etf-ode") tasks = etf_ode(options);
  else if (suite == "null-reduction") tasks = null_reduction(options);
  else if (suite == "ch-exterior") tasks = ch_identity(options, true);
  else if (suite == "ch-symmetric") tasks = ch_identity(options, false);
  else if (suite == "cp-roundtrip") tasks = cp_roundtrip(options);
  else throw DomainError("unknown check suite: " + std::string(suite));
  return run_tasks(tasks, options.workers);
}

}  // namespace genuskit::cli
