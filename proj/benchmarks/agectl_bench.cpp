// Copyright 2026 The agectl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "agectl/corpus.hpp"
#include "agectl/mdp_solver.hpp"
#include "agectl/publisher.hpp"
#include "agectl/threshold_search.hpp"
#include "agectl/trace_sim.hpp"

namespace agectl {
namespace {

SystemParams Reference(int M) {
  SystemParams params = LinearParams(0.54, M, 0.72, 2.0, 0.5);
  return params;
}

void BM_RelativeValueIteration(benchmark::State& state) {
  const SystemParams params = Reference(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveUserProblem(params).value.gain);
}
BENCHMARK(BM_RelativeValueIteration)->Arg(12)->Arg(30)->Arg(60);

void BM_OptimalThreshold(benchmark::State& state) {
  const SystemParams params = Reference(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(OptimalThreshold(params).s_star);
}
BENCHMARK(BM_OptimalThreshold)->Arg(12)->Arg(30)->Arg(60);

void BM_TwoThresholdGrid(benchmark::State& state) {
  SystemParams params = Reference(static_cast<int>(state.range(0)));
  params.P3G = 8.0;
  for (auto _ : state) benchmark::DoNotOptimize(OptimalTwoThresholds(params).reward);
}
BENCHMARK(BM_TwoThresholdGrid)->Arg(12)->Arg(30);

void BM_OptimalBonus(benchmark::State& state) {
  SystemParams params = LinearParams(0.54, 30, 0.0, 40.0);
  params.G = 0.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OptimalBonus(PublisherInstance{params, 50, 11.0}).index());
  }
}
BENCHMARK(BM_OptimalBonus);

void BM_TraceReplay(benchmark::State& state) {
  const SystemParams params = Reference(12);
  const ContactTrace trace = GenerateIidTrace(0.54, static_cast<std::size_t>(state.range(0)), 1);
  const Policy policy = Policy::WifiThreshold(12, 4);
  for (auto _ : state) benchmark::DoNotOptimize(SimulatePolicy(trace, params, policy).total_reward);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TraceReplay)->Arg(1000)->Arg(100000);

void BM_FlatStrategyCorpus(benchmark::State& state) {
  const auto corpus = GenerateCorpus(CorpusOptions{});
  const SystemParams params = LinearParams(0.5, 12, 1.8);
  for (auto _ : state) benchmark::DoNotOptimize(FlatStrategyOptimum(corpus, params, 5).s);
}
BENCHMARK(BM_FlatStrategyCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace agectl

BENCHMARK_MAIN();
