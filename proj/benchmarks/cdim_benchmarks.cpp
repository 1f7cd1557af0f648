// Copyright 2026 The cdim Authors
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

#include <random>

#include "cdim/approx.hpp"
#include "cdim/enumeration.hpp"
#include "cdim/exact.hpp"
#include "cdim/generators.hpp"
#include "cdim/locate.hpp"

namespace cdim {
namespace {

void BM_AllPairsDistances(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.05, rng);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_CentroidalCheck(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  const DistanceMatrix dm = all_pairs_distances(g);
  VertexSet all;
  for (Vertex v = 0; v < g.order(); v += 3) all.push_back(v);
  CentroidalChecker check(dm);
  for (auto _ : state) benchmark::DoNotOptimize(check(all));
}
BENCHMARK(BM_CentroidalCheck)->Arg(64)->Arg(256)->Arg(1024);

void BM_ExactCdPath(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_cd(g));
}
BENCHMARK(BM_ExactCdPath)->DenseRange(8, 24, 4)->Unit(benchmark::kMillisecond);

void BM_ExactCdCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_cd(g));
}
BENCHMARK(BM_ExactCdCycle)->Arg(18)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ApproxCd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.15, rng);
  for (auto _ : state) benchmark::DoNotOptimize(approx_cd(g));
}
BENCHMARK(BM_ApproxCd)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_ConnectedGraphs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cdim

BENCHMARK_MAIN();
