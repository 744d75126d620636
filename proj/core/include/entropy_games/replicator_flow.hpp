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

#ifndef ENTROPY_GAMES_REPLICATOR_FLOW_HPP_
#define ENTROPY_GAMES_REPLICATOR_FLOW_HPP_

#include <vector>

#include "entropy_games/game_core.hpp"
#include "entropy_games/linalg.hpp"

namespace entropy_games {

inline constexpr double kDefaultStep = 1e-3;
// Simplex drift that aborts an integration, and the drift every accepted
// trajectory state must respect.
inline constexpr double kSimplexDriftAbort = 1e-6;
inline constexpr double kSimplexDriftAccept = 1e-8;

struct FitnessReport {
  Vector fitness;       // f_i = sum_j a_ij x_j
  double mean_fitness;  // <f> = sum_kl a_kl x_k x_l
  Vector excess;        // U_i = f_i - <f>
};

FitnessReport fitness(const FrequencyVector& x, const PayoffMatrix& a);

// dx_i/dt = (f_i - <f>) x_i.
Vector replicator_rhs(const FrequencyVector& x, const PayoffMatrix& a);
// Same field for a raw vector that may sit slightly off the simplex.
Vector replicator_rhs_values(const Vector& x, const PayoffMatrix& a);

// -sum x_i ln x_i, with 0 ln 0 = 0.
double shannon_entropy(const FrequencyVector& x);
double shannon_entropy_values(const Vector& x);

// Rate of change of the Shannon entropy under the replicator flow, written as
// the trace Tr{U (H~ - X)} with U = diag(U_i), H~ = diag(-x_i ln x_i) and the
// diagonal of X. Equals sum_i U_i (-x_i ln x_i - x_i).
double shannon_entropy_rate(const FrequencyVector& x, const PayoffMatrix& a);

struct StepOptions {
  double dt = kDefaultStep;
  double t_end = 0.0;
};

// Number of fixed steps covering [0, t_end]; the last step is shortened when
// t_end is not a multiple of dt.
std::vector<double> step_times(const StepOptions& options);

struct Trajectory {
  std::vector<double> times;
  std::vector<FrequencyVector> states;
  std::vector<double> entropies;  // nats

  std::size_t size() const { return times.size(); }
};

// Fixed-step classical RK4, one sample per step (plus t = 0). The state is
// never renormalised; simplex drift beyond kSimplexDriftAbort throws
// InvariantError.
Trajectory integrate(const FrequencyVector& x0, const PayoffMatrix& a,
                     const StepOptions& options);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_REPLICATOR_FLOW_HPP_
