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

#include "entropy_games/quantum_analogue.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entropy_games/errors.hpp"
#include "entropy_games/lax_form.hpp"

namespace entropy_games {

namespace {

constexpr double kSingularEigenvalue = 1e-14;
constexpr double kNonzeroRate = 1e-12;

double hermiticity(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw ValidationError(std::string(what) + " must be square and non-empty");
  }
}

}  // namespace

double DensityResiduals::worst() const {
  return std::max({hermiticity, trace, negativity});
}

Vector hermitian_spectrum(const ComplexMatrix& m) {
  // Symmetrise so rounding-level anti-Hermitian noise cannot bias the solver.
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("Hermitian eigendecomposition failed");
  }
  return solver.eigenvalues();
}

DensityResiduals density_residuals(const ComplexMatrix& rho) {
  DensityResiduals r;
  r.hermiticity = hermiticity(rho);
  r.trace = std::abs(rho.trace() - Complex(1.0, 0.0));
  r.negativity = std::max(0.0, -hermitian_spectrum(rho).minCoeff());
  return r;
}

DensityOperator::DensityOperator(ComplexMatrix entries, double tol)
    : entries_(std::move(entries)) {
  require_square(entries_, "density operator");
  if (!entries_.allFinite()) {
    throw ValidationError("density operator entries must be finite");
  }
  const DensityResiduals r = density_residuals(entries_);
  if (r.hermiticity > tol || r.trace > tol ||
      r.negativity > std::max(tol, kNegativeEigenvalueFloor)) {
    std::ostringstream msg;
    msg << "not a density operator: hermiticity " << r.hermiticity
        << ", trace " << r.trace << ", negative eigenvalue " << r.negativity;
    throw ValidationError(msg.str());
  }
}

double DensityOperator::purity() const {
  return (entries_ * entries_).trace().real();
}

Hamiltonian::Hamiltonian(ComplexMatrix entries, double hbar)
    : entries_(std::move(entries)), hbar_(hbar) {
  require_square(entries_, "Hamiltonian");
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
    throw ValidationError("hbar must be positive and finite");
  }
  if (!entries_.allFinite() || hermiticity(entries_) > kDensityTolerance) {
    throw ValidationError("Hamiltonian must be Hermitian with finite entries");
  }
}

DensityOperator quantize(const FrequencyVector& x) {
  const Matrix xm = build_frequency_matrix(x).matrix();
  const double tol = std::max(kDensityTolerance, 2.0 * x.simplex_drift());
  return DensityOperator(xm.cast<Complex>(), tol);
}

Hamiltonian hamiltonian_from_lambda(const Matrix& lambda, double hbar) {
  if (lambda.rows() != lambda.cols()) {
    throw ValidationError("Lambda must be square");
  }
  const double asym = max_abs(lambda + lambda.transpose());
  if (asym > 1e-10) {
    throw ValidationError("Lambda is not antisymmetric (max |L + L^T| = " +
                          std::to_string(asym) + ")");
  }
  // Average out rounding-level symmetric parts so H is exactly Hermitian.
  const Matrix anti = 0.5 * (lambda - lambda.transpose());
  return Hamiltonian(Complex(0.0, hbar) * anti.cast<Complex>(), hbar);
}

ComplexMatrix von_neumann_rhs(const ComplexMatrix& rho, const Hamiltonian& h) {
  require_dimension(h.size(), static_cast<std::size_t>(rho.rows()),
                    "density operator");
  return Complex(0.0, -1.0 / h.hbar()) * commutator(h.matrix(), rho);
}

ComplexMatrix von_neumann_rhs(const DensityOperator& rho, const Hamiltonian& h) {
  return von_neumann_rhs(rho.matrix(), h);
}

DensityTrajectory integrate_von_neumann(const DensityOperator& rho0,
                                        const HamiltonianProvider& hamiltonian,
                                        const StepOptions& options) {
  DensityTrajectory traj;
  traj.times = step_times(options);
  traj.states.reserve(traj.times.size());

  ComplexMatrix rho = rho0.matrix();
  const double purity0 = rho0.purity();
  traj.states.push_back(rho);
  double worst = 0.0;

  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double t = traj.times[k - 1];
    const double h = traj.times[k] - t;
    const Hamiltonian h_start = hamiltonian(t);
    const Hamiltonian h_mid = hamiltonian(t + 0.5 * h);
    const Hamiltonian h_end = hamiltonian(t + h);

    const ComplexMatrix k1 = von_neumann_rhs(rho, h_start);
    const ComplexMatrix k2 = von_neumann_rhs(rho + 0.5 * h * k1, h_mid);
    const ComplexMatrix k3 = von_neumann_rhs(rho + 0.5 * h * k2, h_mid);
    const ComplexMatrix k4 = von_neumann_rhs(rho + h * k3, h_end);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const DensityResiduals r = density_residuals(rho);
    const double purity_drift = std::abs((rho * rho).trace().real() - purity0);
    const double drift = std::max(r.worst(), purity_drift);
    if (!rho.allFinite() || drift > kDensityDriftAbort) {
      std::ostringstream msg;
      msg << "von Neumann integration drifted by " << drift << " at t = "
          << traj.times[k] << "; reduce dt below " << options.dt;
      throw InvariantError(msg.str());
    }
    worst = std::max(worst, drift);
    traj.states.push_back(rho);
  }

  if (worst > kDensityDriftAccept) {
    std::ostringstream msg;
    msg << "von Neumann integration drifted by " << worst << " (limit "
        << kDensityDriftAccept << "); reduce dt below " << options.dt;
    throw InvariantError(msg.str());
  }
  return traj;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  double s = 0.0;
  for (double lambda : hermitian_spectrum(rho)) {
    if (lambda < -kNegativeEigenvalueFloor) {
      throw ValidationError("density operator has negative eigenvalue " +
                            std::to_string(lambda));
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityOperator& rho) {
  return von_neumann_entropy(rho.matrix());
}

EntropyRateReport entropy_rate_series(const DensityOperator& rho,
                                      const ComplexMatrix& rho_dot) {
  require_dimension(rho.size(), static_cast<std::size_t>(rho_dot.rows()),
                    "rho_dot");
  require_square(rho_dot, "rho_dot");
  if (hermiticity(rho_dot) > 1e-10 || std::abs(rho_dot.trace()) > 1e-10) {
    throw ValidationError("rho_dot must be Hermitian with zero trace");
  }

  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix r2 = r * r;
  const ComplexMatrix r3 = r2 * r;
  EntropyRateReport report;
  report.truncated = (11.0 / 6.0) * rho_dot.trace().real() -
                     6.0 * (r * rho_dot).trace().real() +
                     4.5 * (r2 * rho_dot).trace().real() -
                     (4.0 / 3.0) * (r3 * rho_dot).trace().real();

  const ComplexMatrix herm = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("Hermitian eigendecomposition failed");
  }
  double exact = 0.0;
  for (Eigen::Index m = 0; m < herm.rows(); ++m) {
    const double lambda = solver.eigenvalues()(m);
    const auto v = solver.eigenvectors().col(m);
    const double rate = (v.adjoint() * rho_dot * v)(0, 0).real();
    if (lambda <= kSingularEigenvalue) {
      if (std::abs(rate) > kNonzeroRate) return report;
      continue;
    }
    exact -= rate * (std::log(lambda) + 1.0);
  }
  report.exact = exact;
  report.zeta = exact - report.truncated;
  return report;
}

ReplicatorHamiltonian::ReplicatorHamiltonian(Trajectory trajectory,
                                             PayoffMatrix payoff, double hbar)
    : trajectory_(std::move(trajectory)),
      payoff_(std::move(payoff)),
      hbar_(hbar) {
  if (trajectory_.size() == 0) {
    throw ValidationError("reference trajectory is empty");
  }
  if (!(hbar_ > 0.0)) throw ValidationError("hbar must be positive");
  slopes_.reserve(trajectory_.size());
  for (const auto& x : trajectory_.states) {
    slopes_.push_back(replicator_rhs(x, payoff_));
  }
}

Vector ReplicatorHamiltonian::state_at(double t) const {
  const auto& times = trajectory_.times;
  const double span = std::max(times.back() - times.front(), 1.0);
  if (t < times.front() - 1e-9 * span || t > times.back() + 1e-9 * span) {
    throw ValidationError("requested time " + std::to_string(t) +
                          " is outside the reference trajectory");
  }
  if (times.size() == 1 || t <= times.front()) {
    return trajectory_.states.front().values();
  }
  if (t >= times.back()) return trajectory_.states.back().values();

  const auto upper = std::upper_bound(times.begin(), times.end(), t);
  const auto k = static_cast<std::size_t>(upper - times.begin()) - 1;
  const double h = times[k + 1] - times[k];
  const double s = (t - times[k]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * trajectory_.states[k].values() + (h10 * h) * slopes_[k] +
         h01 * trajectory_.states[k + 1].values() + (h11 * h) * slopes_[k + 1];
}

Hamiltonian ReplicatorHamiltonian::operator()(double t) const {
  const Matrix x = frequency_matrix_entries(state_at(t));
  return hamiltonian_from_lambda(lambda_matrix(x, payoff_), hbar_);
}

CorrespondenceResult run_correspondence(const FrequencyVector& x0,
                                        const PayoffMatrix& a,
                                        const StepOptions& options,
                                        double hbar) {
  CorrespondenceResult result;
  result.classical = integrate(x0, a, options);
  const ReplicatorHamiltonian provider(result.classical, a, hbar);
  result.quantum = integrate_von_neumann(quantize(x0), std::cref(provider), options);

  result.residuals.reserve(result.quantum.size());
  for (std::size_t k = 0; k < result.quantum.size(); ++k) {
    const Matrix expected =
        frequency_matrix_entries(result.classical.states[k].values());
    const double residual =
        max_abs(result.quantum.states[k] - expected.cast<Complex>());
    result.residuals.push_back(residual);
    result.max_residual = std::max(result.max_residual, residual);
  }
  return result;
}

}  // namespace entropy_games
