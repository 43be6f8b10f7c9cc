#include "modlap/modlap.hpp"

#include <benchmark/benchmark.h>

using namespace modlap;

namespace {

void BM_UpperIncompleteGamma(benchmark::State& state) {
  PrecisionScope scope(static_cast<unsigned>(state.range(0)));
  const BigReal p("12.25");
  const BigReal z("9.5");
  for (auto _ : state) benchmark::DoNotOptimize(upper_incomplete_gamma(p, z));
}
BENCHMARK(BM_UpperIncompleteGamma)->Arg(40)->Arg(80)->Arg(160);

void BM_AnharmonicCoefficients(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(anharmonic_coefficients(n));
}
BENCHMARK(BM_AnharmonicCoefficients)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_StationaryPoints(benchmark::State& state) {
  PrecisionScope scope(80);
  const auto hs =
      heaviside_transform(build_series(Model::kAnharmonic, static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(find_stationary_points(hs));
}
BENCHMARK(BM_StationaryPoints)->Arg(9)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_Approximant(benchmark::State& state) {
  PrecisionScope scope(80);
  const auto series = build_series(Model::kNonGaussian, 15, 2);
  const auto hs = heaviside_transform(series);
  const auto x_star = select_x_star(find_stationary_points(hs)).x_star;
  const BigReal m2(3);
  for (auto _ : state) benchmark::DoNotOptimize(approximant(series, hs, x_star, m2));
}
BENCHMARK(BM_Approximant);

}  // namespace

BENCHMARK_MAIN();
