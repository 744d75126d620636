// Copyright 2026 The entropy_games Authors
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


// Integrators: vector, matrix and von Neumann flows, plus the heat network.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "entropy_games/equilibration.hpp"
#include "entropy_games/lax_form.hpp"
#include "entropy_games/quantum_analogue.hpp"
#include "entropy_games/replicator_flow.hpp"

namespace {

using namespace entropy_games;

PayoffMatrix seeded_game(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Matrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (double& v : a.reshaped()) v = u(rng);
  return PayoffMatrix(a);
}

void BM_ReplicatorRhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PayoffMatrix a = seeded_game(n);
  const FrequencyVector x = FrequencyVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(replicator_rhs(x, a));
}
BENCHMARK(BM_ReplicatorRhs)->RangeMultiplier(2)->Range(2, 32);

void BM_Integrate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PayoffMatrix a = seeded_game(n);
  const FrequencyVector x0 = FrequencyVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(x0, a, {1e-3, 1.0}));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Integrate)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MatrixFlow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PayoffMatrix a = seeded_game(n);
  const FrequencyVector x0 = FrequencyVector::uniform(n);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_matrix_flow(x0, a, {1e-3, 1.0}));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_MatrixFlow)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Correspondence(benchmark::State& state) {
  const PayoffMatrix hd{{-1, 2}, {0, 1}};
  const FrequencyVector x0{0.9, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_correspondence(x0, hd, {1e-3, 5.0}).max_residual);
  }
}
BENCHMARK(BM_Correspondence)->Unit(benchmark::kMillisecond);

void BM_EquilibrationRing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<EnsembleNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(make_node("n" + std::to_string(i), {0.0, 1.0},
                              1.0 / (0.5 + 2.5 * static_cast<double>(i) / static_cast<double>(n))));
    edges.emplace_back(i, (i + 1) % n);
  }
  const EnsembleNetwork start(nodes, edges, 1.0, 1e-3);
  for (auto _ : state) {
    EnsembleNetwork net = start;
    benchmark::DoNotOptimize(run(net, {1e-3, 1.0, 100}).size());
  }
}
BENCHMARK(BM_EquilibrationRing)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
