#include <benchmark/benchmark.h>

#include "greedylab/functionals.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/space.hpp"
#include "greedylab/weight.hpp"

using namespace greedylab;

namespace {

FiniteVector input(std::size_t support) {
  SampleOptions o;
  o.count = 1;
  o.last_index = 16;
  o.min_support = support;
  o.max_support = support;
  o.seed = 5;
  return make_samples(o).front();
}

void BM_sigma_lp(benchmark::State& state) {
  const auto x = input(8);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_m(SpaceSpec::lp(2), x, m).value);
}

void BM_sigma_tilde_schreier(benchmark::State& state) {
  const auto x = input(8);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_tilde_m(SpaceSpec::schreier(), x, m).value);
}

void BM_d_f_schreier(benchmark::State& state) {
  const auto x = input(8);
  const auto f = WeightFunction::reciprocal();
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d_m_f(SpaceSpec::schreier(), x, m, &f).value);
}

}  // namespace

BENCHMARK(BM_sigma_lp)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_sigma_tilde_schreier)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_d_f_schreier)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
