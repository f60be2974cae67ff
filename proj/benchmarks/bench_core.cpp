#include <benchmark/benchmark.h>

#include "fbl/heat.hpp"
#include "fbl/norms.hpp"
#include "fbl/random_fields.hpp"
#include "fbl/solvers.hpp"
#include "fbl/spectral.hpp"

using namespace fbl;

namespace {

SpectralField field(int n, int comps, bool solenoidal = false) {
  return random_field(GridSpec(n, 3), {comps, 0.0, n / 3.0, 0.0, true, solenoidal}, 1, 0);
}

void BM_ForwardTransform(benchmark::State& state) {
  const auto f = inverse_transform(field(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(f));
}
BENCHMARK(BM_ForwardTransform)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_PaddedProduct(benchmark::State& state) {
  const auto a = field(static_cast<int>(state.range(0)), 1);
  const auto b = field(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_PaddedProduct)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_VariableLebesgueNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = inverse_transform(field(n, 1));
  const auto p = make_smooth_exponent(3.0, 1.0, Profile::bump, GridSpec(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(variable_lebesgue_norm(f, p));
}
BENCHMARK(BM_VariableLebesgueNorm)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_VariableBesovNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec g(n, 3);
  const auto f = field(n, 1);
  const auto part = build_partition(g);
  const auto s = make_constant_regularity(0.5, g);
  const auto p = make_smooth_exponent(3.0, 1.0, Profile::bump, g);
  for (auto _ : state) benchmark::DoNotOptimize(variable_fourier_besov_norm(f, s, p, 1.0, part));
}
BENCHMARK(BM_VariableBesovNorm)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_NavierStokesBilinear(benchmark::State& state) {
  const auto times = TimeGridSpec{1.0, static_cast<int>(state.range(0))}.nodes();
  const auto u = heat_propagate(field(16, 3, true), times);
  for (auto _ : state) benchmark::DoNotOptimize(ns_bilinear(u, u));
}
BENCHMARK(BM_NavierStokesBilinear)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_KellerSegelBilinear(benchmark::State& state) {
  const auto times = TimeGridSpec{1.0, static_cast<int>(state.range(0))}.nodes();
  const auto u = heat_propagate(field(16, 1), times);
  for (auto _ : state) benchmark::DoNotOptimize(ks_bilinear(u, u));
}
BENCHMARK(BM_KellerSegelBilinear)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
