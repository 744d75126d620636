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

#ifndef ENTROPY_GAMES_QUANTUM_ANALOGUE_HPP_
#define ENTROPY_GAMES_QUANTUM_ANALOGUE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "entropy_games/game_core.hpp"
#include "entropy_games/linalg.hpp"
#include "entropy_games/replicator_flow.hpp"

namespace entropy_games {

inline constexpr double kDensityTolerance = 1e-12;
inline constexpr double kNegativeEigenvalueFloor = 1e-10;

struct DensityResiduals {
  double hermiticity = 0.0;     // max |rho - rho^dagger|
  double trace = 0.0;           // |Tr rho - 1|
  double negativity = 0.0;      // max(0, -lambda_min)

  double worst() const;
};

DensityResiduals density_residuals(const ComplexMatrix& rho);

// Hermitian, unit-trace, positive semidefinite matrix.
class DensityOperator {
 public:
  // Hermiticity and trace are checked against `tol`; eigenvalues must be
  // >= -max(tol, 1e-10).
  explicit DensityOperator(ComplexMatrix entries,
                           double tol = kDensityTolerance);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& matrix() const { return entries_; }

  // Tr rho^2; 1 for pure states.
  double purity() const;

 private:
  ComplexMatrix entries_;
};

class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix entries, double hbar = 1.0);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& matrix() const { return entries_; }
  double hbar() const { return hbar_; }

 private:
  ComplexMatrix entries_;
  double hbar_;
};

// rho_ii = x_i, rho_ij = sqrt(x_i x_j): a real pure state whose diagonal is x.
DensityOperator quantize(const FrequencyVector& x);

// Inverts Lambda = -(i / hbar) H, i.e. H = i hbar Lambda. Lambda must be
// antisymmetric within 1e-10.
Hamiltonian hamiltonian_from_lambda(const Matrix& lambda, double hbar = 1.0);

// d rho / dt = -(i / hbar) [H, rho].
ComplexMatrix von_neumann_rhs(const ComplexMatrix& rho, const Hamiltonian& h);
ComplexMatrix von_neumann_rhs(const DensityOperator& rho, const Hamiltonian& h);

// Time-indexed Hamiltonian. Must stay read-only while an integration runs.
using HamiltonianProvider = std::function<Hamiltonian(double t)>;

struct DensityTrajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> states;

  std::size_t size() const { return times.size(); }
};

inline constexpr double kDensityDriftAbort = 1e-4;
inline constexpr double kDensityDriftAccept = 1e-6;

// Non-autonomous RK4; the provider is evaluated at t, t + dt/2 and t + dt.
// Throws InvariantError when hermiticity, trace, positivity or purity drift
// beyond kDensityDriftAbort, or end beyond kDensityDriftAccept.
DensityTrajectory integrate_von_neumann(const DensityOperator& rho0,
                                        const HamiltonianProvider& hamiltonian,
                                        const StepOptions& options);

// Ascending eigenvalues of a Hermitian matrix.
Vector hermitian_spectrum(const ComplexMatrix& m);

// -Tr rho ln rho from the spectrum; eigenvalues in [-1e-10, 0] count as 0.
double von_neumann_entropy(const DensityOperator& rho);
double von_neumann_entropy(const ComplexMatrix& rho);

struct EntropyRateReport {
  // 11/6 sum_i rho'_ii - 6 sum_ij rho_ij rho'_ji
  //   + 9/2 sum_ijk rho_ij rho_jk rho'_ki
  //   - 4/3 sum_ijkl rho_ij rho_jk rho_kl rho'_li
  double truncated = 0.0;
  // -sum_m lambda'_m (ln lambda_m + 1) with lambda'_m = <m|rho'|m>. Empty
  // when an eigenvalue <= 1e-14 carries a nonzero lambda'.
  std::optional<double> exact;
  // exact - truncated: whatever the four-term series leaves out.
  std::optional<double> zeta;
};

EntropyRateReport entropy_rate_series(const DensityOperator& rho,
                                      const ComplexMatrix& rho_dot);

// Hamiltonian i hbar Lambda(x(t)) driven by a classical replicator
// trajectory. Between samples x(t) is rebuilt by cubic Hermite interpolation
// using the replicator vector field as the knot derivatives.
class ReplicatorHamiltonian {
 public:
  ReplicatorHamiltonian(Trajectory trajectory, PayoffMatrix payoff,
                        double hbar = 1.0);

  Vector state_at(double t) const;
  Hamiltonian operator()(double t) const;

  const Trajectory& trajectory() const { return trajectory_; }

 private:
  Trajectory trajectory_;
  std::vector<Vector> slopes_;
  PayoffMatrix payoff_;
  double hbar_;
};

struct CorrespondenceResult {
  Trajectory classical;
  DensityTrajectory quantum;
  std::vector<double> residuals;  // max_ij |rho(t) - quantize(x(t))| per sample
  double max_residual = 0.0;
};

// Evolves quantize(x0) under i hbar Lambda(x(t)) and compares it against
// quantize(x(t)) from the classical replicator trajectory.
CorrespondenceResult run_correspondence(const FrequencyVector& x0,
                                        const PayoffMatrix& a,
                                        const StepOptions& options,
                                        double hbar = 1.0);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_QUANTUM_ANALOGUE_HPP_
