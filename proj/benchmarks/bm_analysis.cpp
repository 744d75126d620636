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


// Static analyses: equilibrium search, entropy rates, ensembles, joints.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "entropy_games/game_core.hpp"
#include "entropy_games/info_theory.hpp"
#include "entropy_games/quantum_analogue.hpp"
#include "entropy_games/thermo.hpp"

namespace {

using namespace entropy_games;

void BM_EnumerateEquilibria(benchmark::State& state) {
  const PayoffMatrix rps{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_symmetric_equilibria(rps, res));
}
BENCHMARK(BM_EnumerateEquilibria)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_IsEss(benchmark::State& state) {
  const PayoffMatrix hd{{-1, 2}, {0, 1}};
  const FrequencyVector p{0.5, 0.5};
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_ess(p, hd, kPayoffTieTolerance, res));
}
BENCHMARK(BM_IsEss)->Arg(100)->Arg(1000);

void BM_EntropyRateSeries(benchmark::State& state) {
  const auto n = state.range(0);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = m * m.adjoint();
  rho /= rho.trace();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  const DensityOperator op(rho);
  ComplexMatrix dot = ComplexMatrix::Zero(n, n);
  dot(0, 0) = 0.01;
  dot(n - 1, n - 1) = -0.01;
  for (auto _ : state) benchmark::DoNotOptimize(entropy_rate_series(op, dot));
}
BENCHMARK(BM_EntropyRateSeries)->Arg(2)->Arg(4)->Arg(16);

void BM_Gibbs(benchmark::State& state) {
  std::vector<double> e(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = 0.01 * static_cast<double>(i);
  for (auto _ : state) benchmark::DoNotOptimize(gibbs(e, 1.3).entropy);
}
BENCHMARK(BM_Gibbs)->RangeMultiplier(8)->Range(8, 4096);

void BM_FitBeta(benchmark::State& state) {
  std::vector<double> e(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = 0.01 * static_cast<double>(i);
  const double target = gibbs(e, 0.7).mean_energy;
  for (auto _ : state) benchmark::DoNotOptimize(fit_beta(e, target));
}
BENCHMARK(BM_FitBeta)->Arg(8)->Arg(512);

void BM_InfoReport(benchmark::State& state) {
  const auto n = state.range(0);
  Matrix p = Matrix::Constant(n, n, 1.0);
  for (Eigen::Index i = 0; i < n; ++i) p(i, i) += static_cast<double>(n);
  p /= p.sum();
  const JointDistribution j(p);
  for (auto _ : state) benchmark::DoNotOptimize(info_report(j));
}
BENCHMARK(BM_InfoReport)->Arg(4)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
