#include <benchmark/benchmark.h>

#include <random>

#include "genuskit/eta.hpp"
#include "genuskit/genus.hpp"
#include "genuskit/graded.hpp"

using namespace genuskit;

namespace {

RationalSeries random_invertible(int order) {
  std::mt19937_64 eng(42);
  std::uniform_int_distribution<int> num(-100, 100), den(1, 100);
  RationalSeries a(order);
  a[1] = Rational(BigInt(num(eng) | 1), BigInt(den(eng)));
  for (int k = 2; k <= order; ++k) a[k] = Rational(BigInt(num(eng)), BigInt(den(eng)));
  return a;
}

void BM_CompInverseLagrange(benchmark::State& state) {
  const RationalSeries a = random_invertible(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_comp_inverse_lagrange(a));
}
BENCHMARK(BM_CompInverseLagrange)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CompInverseNewton(benchmark::State& state) {
  const RationalSeries a = random_invertible(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_comp_inverse_newton(a));
}
BENCHMARK(BM_CompInverseNewton)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CpValueL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Genus l(l_genus_series(n));
  for (auto _ : state) benchmark::DoNotOptimize(cp_value(l, n));
}
BENCHMARK(BM_CpValueL)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_ExpandInPontryagin(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const Genus ahat(ahat_series(w / 2));
  for (auto _ : state) benchmark::DoNotOptimize(expand_in_pontryagin(ahat, w));
}
BENCHMARK(BM_ExpandInPontryagin)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_HabelEta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(habel_eta(n));
}
BENCHMARK(BM_HabelEta)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HabelSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_habel(n, 1));
}
BENCHMARK(BM_HabelSweep)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_EtfResidual(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const auto tab = std::make_shared<const GeneratorTable>(
      std::vector<Generator>{{"g3", 3}, {"g5", 5}, {"g4", 4}, {"g4b", 4}});
  auto g = [&](const char* name) { return GradedElement::generator(name, tab, D, kDefaultTimeBound); };
  const GradedElement xi = g("g3") + g("g5"), psi = g("g4"), Psi = g("g4b");
  for (auto _ : state) benchmark::DoNotOptimize(etf_ode_residual(xi, psi, Psi));
}
BENCHMARK(BM_EtfResidual)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_NullReduction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Genus l(l_genus_series(2 * n + 4));
  for (auto _ : state) benchmark::DoNotOptimize(null_reduction_check(l, n, 2 * n + 4));
}
BENCHMARK(BM_NullReduction)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
