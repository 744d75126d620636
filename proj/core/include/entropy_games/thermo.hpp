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

#ifndef ENTROPY_GAMES_THERMO_HPP_
#define ENTROPY_GAMES_THERMO_HPP_

#include <optional>
#include <span>
#include <vector>

namespace entropy_games {

// Energy levels E_i at inverse temperature beta. Negative beta is allowed
// (population inversion).
struct CanonicalEnsemble {
  std::vector<double> energies;
  double beta = 0.0;
};

struct EnsembleReport {
  double z = 0.0;      // partition function; may overflow to inf, see log_z
  double log_z = 0.0;
  std::vector<double> probs;
  double mean_energy = 0.0;
  double energy_variance = 0.0;
  double third_central_moment = 0.0;
  double entropy = 0.0;      // nats, ln Z + beta <E>
  double temperature = 0.0;  // 1 / beta (inf at beta = 0)
};

// Gibbs distribution p_i = exp(-beta E_i) / Z, evaluated with a log-sum-exp
// shift.
EnsembleReport gibbs(std::span<const double> energies, double beta);
inline EnsembleReport gibbs(const CanonicalEnsemble& ensemble) {
  return gibbs(ensemble.energies, ensemble.beta);
}

struct EntropyDerivatives {
  // With respect to <E>; empty for a flat spectrum (variance <= 1e-14).
  std::optional<double> ds_de;    // 1 / tau = beta
  std::optional<double> d2s_de2;  // -(1/tau^2) d tau / d<E> = -1 / var
  double ds_dbeta = 0.0;          // -beta var
  double d2s_dbeta2 = 0.0;        // d<E>/dbeta + beta d^2<E>/dbeta^2
};

// Spectrum held fixed, beta is the only parameter. Uses d<E>/dbeta = -var and
// d^2<E>/dbeta^2 = third central moment.
EntropyDerivatives entropy_derivatives(std::span<const double> energies,
                                       double beta);

// Solves <E>(beta) = target by bisection. The target must lie strictly inside
// (min E, max E); the bracket [-b, b] doubles until it contains the root.
double fit_beta(std::span<const double> energies, double target_mean_energy,
                double tol = 1e-12);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_THERMO_HPP_
