// Copyright 2026 The moqp Authors
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


// Serial references against the OpenMP kernels.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "moqp/fixtures.hpp"
#include "moqp/pareto.hpp"
#include "moqp/sampling.hpp"
#include "moqp/sweep.hpp"
#include "moqp/weights.hpp"

namespace {

using moqp::MoqpInstance;
using moqp::SampleCloud;

const MoqpInstance& Portfolio() {
  static const MoqpInstance inst = moqp::fixtures::Load("portfolio");
  return inst;
}

const SampleCloud& PortfolioCloud(std::size_t n) {
  static std::vector<std::pair<std::size_t, SampleCloud>> cache;
  for (const auto& [size, cloud] : cache) {
    if (size == n) return cloud;
  }
  cache.emplace_back(n, moqp::SampleFeasible(Portfolio(), n));
  return cache.back().second;
}

template <auto Fn>
void BM_BruteMin(benchmark::State& state) {
  const SampleCloud& cloud = PortfolioCloud(static_cast<std::size_t>(state.range(0)));
  const moqp::WeightVector w = moqp::GenWeightsPaper(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(Portfolio(), w, cloud));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_ParetoFilter(benchmark::State& state) {
  const SampleCloud& cloud = PortfolioCloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(cloud, moqp::ParetoMode::kPareto));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_Sweep(benchmark::State& state) {
  const MoqpInstance inst = moqp::fixtures::Load("ex52");
  std::vector<moqp::WeightVector> weights;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    weights.push_back(moqp::GenWeightsPaper(inst.p(), static_cast<std::uint64_t>(i)));
  }
  const moqp::SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(inst, weights, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_BruteMin<moqp::BruteMinSerial>)->Arg(5000)->Arg(50000);
BENCHMARK(BM_BruteMin<moqp::BruteMin>)->Arg(5000)->Arg(50000);
BENCHMARK(BM_ParetoFilter<moqp::ParetoFilterSerial>)->Arg(2000)->Arg(8000);
BENCHMARK(BM_ParetoFilter<moqp::ParetoFilter>)->Arg(2000)->Arg(8000);
BENCHMARK(BM_Sweep<moqp::SweepSerial>)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<moqp::Sweep>)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
