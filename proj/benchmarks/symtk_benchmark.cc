// Copyright 2026 The symtk Authors.
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

#include <numeric>
#include <vector>

#include "benchmark/benchmark.h"
#include "symtk/graph.h"
#include "symtk/graph_io.h"
#include "symtk/group.h"
#include "symtk/partition.h"
#include "symtk/search.h"
#include "symtk/theorem.h"

namespace symtk {
namespace {

std::vector<Permutation> SymmetricGenerators(std::size_t n) {
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{1});
  return {Permutation::FromCycles(n, {{1, 2}}), Permutation::FromCycles(n, {cycle})};
}

void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const auto gens = SymmetricGenerators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SchreierSims(gens).Order());
  }
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(5)->Arg(10)->Arg(20);

void BM_ClosureS5(benchmark::State& state) {
  const auto gens = S5Generators();
  for (auto _ : state) benchmark::DoNotOptimize(Closure(gens, 1000));
}
BENCHMARK(BM_ClosureS5);

void BM_RefinePetersenIndividualized(benchmark::State& state) {
  const Graph g = PetersenSubsets();
  const auto start = OrderedPartition::Unit(10).Individualize(0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(Refine(g, start));
}
BENCHMARK(BM_RefinePetersenIndividualized);

void BM_SearchPetersen(benchmark::State& state) {
  const Graph g = PetersenSubsets();
  SearchOptions options;
  options.orbit_pruning = state.range(0) != 0;
  for (auto _ : state) {
    const auto result = SearchAutomorphisms(g, options);
    state.counters["leaves"] = static_cast<double>(result.stats.leaves);
  }
}
BENCHMARK(BM_SearchPetersen)->Arg(0)->Arg(1)->ArgName("pruning");

void BM_AutomorphismGroupEdgeless(benchmark::State& state) {
  const Graph g(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AutomorphismGroup(g));
}
BENCHMARK(BM_AutomorphismGroupEdgeless)->Arg(8)->Arg(16)->Arg(32);

void BM_BruteForcePetersen(benchmark::State& state) {
  const Graph g = PetersenSubsets();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ScanAllPermutations(g, threads));
}
BENCHMARK(BM_BruteForcePetersen)->Arg(1)->Arg(4)->ArgName("threads")
    ->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(VerifyTheorem());
}
BENCHMARK(BM_VerifyTheorem)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = JohnsonGeneral(8, 3, 1);  // 56 vertices
  for (auto _ : state) benchmark::DoNotOptimize(Graph6Decode(Graph6Encode(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace
}  // namespace symtk

BENCHMARK_MAIN();
