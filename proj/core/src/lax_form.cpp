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

#include "entropy_games/lax_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entropy_games/errors.hpp"

namespace entropy_games {

namespace {

constexpr double kNegativeEigenvalueTolerance = 1e-10;
constexpr double kThetaCrossCheck = 1e-8;

Matrix flow_rhs(const Matrix& x, const PayoffMatrix& a) {
  return commutator(lambda_matrix(x, a), x);
}

}  // namespace

double MatrixInvariantResiduals::worst() const {
  return std::max({symmetry, trace, idempotency});
}

MatrixInvariantResiduals matrix_invariant_residuals(const Matrix& x) {
  MatrixInvariantResiduals r;
  r.symmetry = max_abs(x - x.transpose());
  r.trace = std::abs(x.trace() - 1.0);
  r.idempotency = max_abs(x * x - x);
  return r;
}

FrequencyMatrix::FrequencyMatrix(Matrix entries, double tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw ValidationError("frequency matrix must be square and non-empty");
  }
  const auto r = matrix_invariant_residuals(entries_);
  if (!entries_.allFinite() || r.worst() > tol) {
    std::ostringstream msg;
    msg << "not a frequency matrix: symmetry " << r.symmetry << ", trace "
        << r.trace << ", idempotency " << r.idempotency << " (tol " << tol
        << ")";
    throw ValidationError(msg.str());
  }
}

Matrix frequency_matrix_entries(const Vector& x) {
  const Vector root = x.cwiseMax(0.0).cwiseSqrt();
  return root * root.transpose();
}

FrequencyMatrix build_frequency_matrix(const FrequencyVector& x) {
  Matrix m = frequency_matrix_entries(x.values());
  // The outer product rounds sqrt(x_i)^2; pin the diagonal to x exactly.
  m.diagonal() = x.values();
  return FrequencyMatrix(std::move(m));
}

Matrix lambda_matrix(const Matrix& x, const PayoffMatrix& a) {
  require_dimension(a.size(), static_cast<std::size_t>(x.rows()),
                    "frequency matrix X");
  const Vector f = a.matrix() * x.diagonal();
  const auto n = x.rows();
  Matrix lambda(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      lambda(i, j) = 0.5 * (f(i) * x(i, j) - x(j, i) * f(j));
    }
  }
  return lambda;
}

LaxOperators lax_operators(const FrequencyVector& x, const PayoffMatrix& a) {
  require_dimension(a.size(), x.size(), "frequency vector x");
  const Matrix xm = build_frequency_matrix(x).matrix();
  const Vector f = a.matrix() * x.values();
  const double mean = x.values().dot(f);
  const auto n = xm.rows();

  LaxOperators ops;
  ops.q = (0.5 * f).asDiagonal();
  ops.lambda = lambda_matrix(xm, a);
  ops.theta = commutator(ops.lambda, xm);
  ops.g_sym.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ops.g_sym(i, j) = 0.5 * f(i) * xm(i, j) + 0.5 * f(j) * xm(j, i) -
                        mean * xm(i, j);
    }
  }

  const double mismatch = max_abs(ops.theta - ops.g_sym);
  if (mismatch > kThetaCrossCheck) {
    std::ostringstream msg;
    msg << "internal consistency failure: [Lambda, X] differs from G + G^T by "
        << mismatch;
    throw InvariantError(msg.str());
  }
  return ops;
}

MatrixTrajectory integrate_matrix_flow(const FrequencyVector& x0,
                                       const PayoffMatrix& a,
                                       const StepOptions& options) {
  require_dimension(a.size(), x0.size(), "initial state x0");
  MatrixTrajectory traj;
  traj.times = step_times(options);
  traj.states.reserve(traj.times.size());

  Matrix x = build_frequency_matrix(x0).matrix();
  traj.states.push_back(x);
  double worst = 0.0;

  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double h = traj.times[k] - traj.times[k - 1];
    const Matrix k1 = flow_rhs(x, a);
    const Matrix k2 = flow_rhs(x + 0.5 * h * k1, a);
    const Matrix k3 = flow_rhs(x + 0.5 * h * k2, a);
    const Matrix k4 = flow_rhs(x + h * k3, a);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double drift = matrix_invariant_residuals(x).worst();
    if (!x.allFinite() || drift > kMatrixDriftAbort) {
      std::ostringstream msg;
      msg << "matrix flow invariants drifted by " << drift << " at t = "
          << traj.times[k] << "; reduce dt below " << options.dt;
      throw InvariantError(msg.str());
    }
    worst = std::max(worst, drift);
    traj.states.push_back(x);
  }

  if (worst > kMatrixDriftAccept) {
    std::ostringstream msg;
    msg << "matrix flow invariants drifted by " << worst << " (limit "
        << kMatrixDriftAccept << "); reduce dt below " << options.dt;
    throw InvariantError(msg.str());
  }
  return traj;
}

Vector symmetric_spectrum(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvariantError("symmetric eigendecomposition failed");
  }
  return solver.eigenvalues();
}

double matrix_entropy(const FrequencyMatrix& x, MatrixEntropyMode mode) {
  if (mode == MatrixEntropyMode::kDiagonal) {
    return shannon_entropy_values(x.matrix().diagonal());
  }
  double h = 0.0;
  for (double lambda : symmetric_spectrum(x.matrix())) {
    if (lambda < -kNegativeEigenvalueTolerance) {
      throw ValidationError("frequency matrix has negative eigenvalue " +
                            std::to_string(lambda));
    }
    if (lambda > 0.0) h -= lambda * std::log(lambda);
  }
  return h;
}

}  // namespace entropy_games
