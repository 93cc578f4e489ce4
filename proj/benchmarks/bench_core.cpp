#include <benchmark/benchmark.h>

#include "core_entropy/entropy.hpp"
#include "core_entropy/galois.hpp"
#include "core_entropy/symbolic.hpp"
#include "core_entropy/transition.hpp"

using namespace core_entropy;

namespace {

// 0.(0^{n-2}11): orbit of n points, basis of n(n-1)/2 pairs
Angle periodic_angle(int n) {
  return from_binary(BinaryAngle{"", std::string(static_cast<std::size_t>(n - 2), '0') + "11"});
}

void BM_BuildPairMatrix(benchmark::State& state) {
  const Angle a = periodic_angle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_pair_matrix(a));
  state.counters["dim"] = static_cast<double>(build_pair_matrix(a).dim());
}
BENCHMARK(BM_BuildPairMatrix)->Arg(16)->Arg(64)->Arg(256);

void BM_GrowthRate(benchmark::State& state) {
  const auto pm = build_pair_matrix(periodic_angle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(growth_rate(pm.matrix));
}
BENCHMARK(BM_GrowthRate)->Arg(8)->Arg(32)->Arg(128);

void BM_CoreEntropy(benchmark::State& state) {
  const Angle a(1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(core_entropy::core_entropy(a));
}
BENCHMARK(BM_CoreEntropy);

void BM_Survivors(benchmark::State& state) {
  const Angle a(5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(real_tree_survivors(a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Survivors)->Arg(12)->Arg(16)->Arg(20);

void BM_ComplexRoots(benchmark::State& state) {
  // x^d - x - 1
  const int d = static_cast<int>(state.range(0));
  const IntPolynomial p = IntPolynomial::monomial(1, static_cast<std::size_t>(d)) - IntPolynomial{1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(p));
}
BENCHMARK(BM_ComplexRoots)->Arg(8)->Arg(16)->Arg(32);

void BM_GraphSamples(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(graph_samples(Angle(3, 16), Angle(5, 16), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GraphSamples)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
