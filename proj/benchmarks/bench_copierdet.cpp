// Copyright 2026 The copierdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "copierdet/cascade.hpp"
#include "copierdet/information.hpp"

using namespace copierdet;

static void BM_ConditionalDistributions(benchmark::State& state) {
  const int levels = static_cast<int>(state.range(0));
  const CopierParams c(0.9, 0.3);
  const DetectorParams d(0.7, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_distributions(SchemeConfig(levels, 0.5), c, d));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(pattern_count(levels)));
}
BENCHMARK(BM_ConditionalDistributions)->DenseRange(0, kMaxExactLevels);

static void BM_EvaluateScheme(benchmark::State& state) {
  const int levels = static_cast<int>(state.range(0));
  const CopierParams c(0.8, -1.0);
  const DetectorParams d(0.6, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_scheme(SchemeConfig(levels, 0.5), c, d));
  }
}
BENCHMARK(BM_EvaluateScheme)->DenseRange(0, kMaxExactLevels);

static void BM_EffectiveEfficiencyBisection(benchmark::State& state) {
  const double target = baseline_mutual_information(0.6123, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(effective_efficiency(target, 0.5));
}
BENCHMARK(BM_EffectiveEfficiencyBisection);

static void BM_MonteCarlo(benchmark::State& state) {
  const int levels = static_cast<int>(state.range(0));
  const CopierParams c(0.9, 0.3);
  const DetectorParams d(0.7, 0.1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_distribution(Symbol::kPhoton, levels, c, d, 10000, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->DenseRange(1, kMaxMonteCarloLevels, 2);

BENCHMARK_MAIN();
