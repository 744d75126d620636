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

#include "entropy_games/replicator_flow.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "entropy_games/errors.hpp"

namespace entropy_games {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

}  // namespace

FitnessReport fitness(const FrequencyVector& x, const PayoffMatrix& a) {
  require_dimension(a.size(), x.size(), "frequency vector x");
  FitnessReport report;
  report.fitness = a.matrix() * x.values();
  report.mean_fitness = x.values().dot(report.fitness);
  report.excess = report.fitness.array() - report.mean_fitness;
  return report;
}

Vector replicator_rhs_values(const Vector& x, const PayoffMatrix& a) {
  require_dimension(a.size(), static_cast<std::size_t>(x.size()),
                    "frequency vector x");
  const Vector f = a.matrix() * x;
  // Off the simplex, normalise by the total so that sum(x) is a linear
  // invariant of the field and RK4 keeps it to rounding.
  const double mean = x.dot(f) / x.sum();
  return ((f.array() - mean) * x.array()).matrix();
}

Vector replicator_rhs(const FrequencyVector& x, const PayoffMatrix& a) {
  return replicator_rhs_values(x.values(), a);
}

double shannon_entropy_values(const Vector& x) {
  double h = 0.0;
  for (double p : x) h += entropy_term(p);
  return h;
}

double shannon_entropy(const FrequencyVector& x) {
  return shannon_entropy_values(x.values());
}

double shannon_entropy_rate(const FrequencyVector& x, const PayoffMatrix& a) {
  const FitnessReport report = fitness(x, a);
  const Vector& xv = x.values();
  const auto n = xv.size();
  const Matrix u = report.excess.asDiagonal();
  Matrix h_tilde = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h_tilde(i, i) = entropy_term(xv(i));
  const Matrix x_diag = xv.asDiagonal();
  return (u * (h_tilde - x_diag)).trace();
}

std::vector<double> step_times(const StepOptions& options) {
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) {
    throw ValidationError("step size dt must be positive and finite");
  }
  if (!(options.t_end >= 0.0) || !std::isfinite(options.t_end)) {
    throw ValidationError("t_end must be non-negative and finite");
  }
  std::vector<double> times{0.0};
  const auto full_steps =
      static_cast<long long>(std::floor(options.t_end / options.dt + 1e-9));
  times.reserve(static_cast<std::size_t>(full_steps) + 2);
  for (long long k = 1; k <= full_steps; ++k) {
    times.push_back(static_cast<double>(k) * options.dt);
  }
  if (options.t_end - times.back() > 1e-9 * options.dt) {
    times.push_back(options.t_end);
  } else if (full_steps > 0) {
    times.back() = options.t_end;
  }
  return times;
}

Trajectory integrate(const FrequencyVector& x0, const PayoffMatrix& a,
                     const StepOptions& options) {
  require_dimension(a.size(), x0.size(), "initial state x0");
  Trajectory traj;
  traj.times = step_times(options);
  traj.states.reserve(traj.times.size());
  traj.entropies.reserve(traj.times.size());

  Vector x = x0.values();
  traj.states.push_back(x0);
  traj.entropies.push_back(shannon_entropy_values(x));

  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double h = traj.times[k] - traj.times[k - 1];
    const Vector k1 = replicator_rhs_values(x, a);
    const Vector k2 = replicator_rhs_values((x + 0.5 * h * k1).eval(), a);
    const Vector k3 = replicator_rhs_values((x + 0.5 * h * k2).eval(), a);
    const Vector k4 = replicator_rhs_values((x + h * k3).eval(), a);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double drift = std::abs(x.sum() - 1.0);
    if (!x.allFinite() || drift > kSimplexDriftAbort ||
        x.minCoeff() < -kSimplexDriftAbort) {
      std::ostringstream msg;
      msg << "replicator integration left the simplex at t = " << traj.times[k]
          << " (drift " << drift << " > " << kSimplexDriftAbort
          << "); reduce dt below " << options.dt;
      throw InvariantError(msg.str());
    }
    traj.states.emplace_back(x, kSimplexDriftAbort);
    traj.entropies.push_back(shannon_entropy_values(x));
  }

  if (traj.states.back().simplex_drift() > kSimplexDriftAccept) {
    std::ostringstream msg;
    msg << "final simplex drift " << traj.states.back().simplex_drift()
        << " exceeds " << kSimplexDriftAccept << "; reduce dt below "
        << options.dt;
    throw InvariantError(msg.str());
  }
  return traj;
}

}  // namespace entropy_games
