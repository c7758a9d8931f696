#include <benchmark/benchmark.h>

#include "greedylab/greedy.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/space.hpp"

using namespace greedylab;

namespace {

std::vector<FiniteVector> inputs(Index last, std::size_t support) {
  SampleOptions o;
  o.count = 64;
  o.last_index = last;
  o.min_support = support;
  o.max_support = support;
  o.seed = 17;
  return make_samples(o);
}

void run_norm(benchmark::State& state, const SpaceSpec& space) {
  const auto xs = inputs(static_cast<Index>(state.range(0)), static_cast<std::size_t>(state.range(0)) / 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_norm(space, xs[i++ % xs.size()]));
  }
}

void BM_lp(benchmark::State& state) { run_norm(state, SpaceSpec::lp(1.5)); }
void BM_schreier(benchmark::State& state) { run_norm(state, SpaceSpec::schreier()); }
void BM_signed_subsequence(benchmark::State& state) { run_norm(state, SpaceSpec::signed_subsequence()); }
void BM_weighted_mixed(benchmark::State& state) { run_norm(state, SpaceSpec::weighted_mixed()); }

void BM_greedy_order(benchmark::State& state) {
  const auto xs = inputs(static_cast<Index>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_ordering(xs[i++ % xs.size()]));
  }
}

}  // namespace

BENCHMARK(BM_lp)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_schreier)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_signed_subsequence)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_weighted_mixed)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_greedy_order)->RangeMultiplier(4)->Range(16, 4096);
