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

#include "entropy_games/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entropy_games/errors.hpp"

namespace entropy_games {

namespace {

constexpr double kFlatSpectrumVariance = 1e-14;

void validate(std::span<const double> energies, double beta) {
  if (energies.empty()) throw ValidationError("energy list is empty");
  for (double e : energies) {
    if (!std::isfinite(e)) throw ValidationError("energies must be finite");
  }
  if (!std::isfinite(beta)) throw ValidationError("beta must be finite");
}

double mean_energy_at(std::span<const double> energies, double beta) {
  return gibbs(energies, beta).mean_energy;
}

}  // namespace

EnsembleReport gibbs(std::span<const double> energies, double beta) {
  validate(energies, beta);
  double shift = -std::numeric_limits<double>::infinity();
  for (double e : energies) shift = std::max(shift, -beta * e);

  EnsembleReport r;
  r.probs.reserve(energies.size());
  double sum = 0.0;
  for (double e : energies) {
    r.probs.push_back(std::exp(-beta * e - shift));
    sum += r.probs.back();
  }
  for (double& p : r.probs) p /= sum;

  r.log_z = shift + std::log(sum);
  r.z = std::exp(r.log_z);
  for (std::size_t i = 0; i < energies.size(); ++i) {
    r.mean_energy += r.probs[i] * energies[i];
  }
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const double d = energies[i] - r.mean_energy;
    r.energy_variance += r.probs[i] * d * d;
    r.third_central_moment += r.probs[i] * d * d * d;
  }
  r.entropy = r.log_z + beta * r.mean_energy;
  r.temperature = beta == 0.0 ? std::numeric_limits<double>::infinity()
                              : 1.0 / beta;
  return r;
}

EntropyDerivatives entropy_derivatives(std::span<const double> energies,
                                       double beta) {
  const EnsembleReport r = gibbs(energies, beta);
  EntropyDerivatives d;
  const double de_dbeta = -r.energy_variance;
  const double d2e_dbeta2 = r.third_central_moment;
  d.ds_dbeta = -beta * r.energy_variance;
  d.d2s_dbeta2 = de_dbeta + beta * d2e_dbeta2;
  if (r.energy_variance > kFlatSpectrumVariance) {
    d.ds_de = beta;
    // -(1/tau^2) dtau/d<E> with tau = 1/beta collapses to dbeta/d<E>, which
    // stays finite at beta = 0.
    d.d2s_de2 = 1.0 / de_dbeta;
  }
  return d;
}

double fit_beta(std::span<const double> energies, double target, double tol) {
  validate(energies, 0.0);
  if (!(tol > 0.0)) throw ValidationError("fit tolerance must be positive");
  const auto [lo_it, hi_it] = std::minmax_element(energies.begin(), energies.end());
  const double e_min = *lo_it;
  const double e_max = *hi_it;
  if (e_max - e_min <= 0.0) {
    throw ValidationError("cannot fit beta to a degenerate spectrum");
  }
  if (!std::isfinite(target) || !(target > e_min) || !(target < e_max)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "target mean energy " << target
        << " is unreachable: it must lie strictly inside (" << e_min << ", "
        << e_max << ")";
    throw ValidationError(msg.str());
  }

  // <E>(beta) decreases strictly; find [lo, hi] with <E>(lo) >= target >=
  // <E>(hi).
  double bound = 1.0;
  while (!(mean_energy_at(energies, -bound) >= target &&
           mean_energy_at(energies, bound) <= target)) {
    bound *= 2.0;
    if (bound > 1e300) throw InvariantError("failed to bracket beta");
  }
  double lo = -bound;
  double hi = bound;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double e = mean_energy_at(energies, mid);
    if (std::abs(e - target) < tol) return mid;
    if (mid == lo || mid == hi) break;
    if (e > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (std::abs(mean_energy_at(energies, mid) - target) < tol) return mid;
  std::ostringstream msg;
  msg.precision(17);
  msg << "bisection exhausted at beta = " << mid << " without reaching tolerance "
      << tol;
  throw InvariantError(msg.str());
}

}  // namespace entropy_games
