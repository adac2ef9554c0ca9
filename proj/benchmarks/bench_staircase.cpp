#include <benchmark/benchmark.h>

#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/moments.hpp"
#include "staircase/sampler.hpp"

namespace staircase {
namespace {

const Weights kWeights(Rational(1, 2), Rational(3, 2));

void BM_FullPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constrained_partition(n, kWeights, {}));
}
BENCHMARK(BM_FullPartition)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ConstrainedEvent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConstraintSet c{{{n - 1, 1}, Requirement::MustAlpha}, {{1, n - 1}, Requirement::MustNonEmpty}};
  for (auto _ : state) benchmark::DoNotOptimize(event_prob(n, kWeights, c));
}
BENCHMARK(BM_ConstrainedEvent)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_tableaux(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

void BM_StatisticLawDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(statistic_pmf_dp(n, kWeights, Statistic::X3));
}
BENCHMARK(BM_StatisticLawDp)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_SecondDiagonalMoments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorial_moments_second_diag(n, kWeights, EventKind::NonEmpty, 4));
  }
}
BENCHMARK(BM_SecondDiagonalMoments)->RangeMultiplier(4)->Range(16, 1024);

void BM_PoissonDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Pmf p = second_diag_pmf(n, kWeights, EventKind::Alpha);
  for (auto _ : state) benchmark::DoNotOptimize(tv_to_poisson(p, Rational(1, 2)));
}
BENCHMARK(BM_PoissonDistance)->RangeMultiplier(4)->Range(16, 256);

void BM_Sample(benchmark::State& state) {
  const auto method = static_cast<SampleMethod>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  Rng rng(1);
  sample(n, kWeights, rng, method);  // build cached tables outside the loop
  for (auto _ : state) benchmark::DoNotOptimize(sample(n, kWeights, rng, method));
}
BENCHMARK(BM_Sample)
    ->Args({static_cast<int>(SampleMethod::ChainRule), 8})
    ->Args({static_cast<int>(SampleMethod::ChainRule), 16})
    ->Args({static_cast<int>(SampleMethod::EnumAlias), 8});

}  // namespace
}  // namespace staircase

BENCHMARK_MAIN();
