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

#ifndef ENTROPY_GAMES_LAX_FORM_HPP_
#define ENTROPY_GAMES_LAX_FORM_HPP_

#include <vector>

#include "entropy_games/game_core.hpp"
#include "entropy_games/linalg.hpp"
#include "entropy_games/replicator_flow.hpp"

namespace entropy_games {

struct MatrixInvariantResiduals {
  double symmetry = 0.0;     // max |X - X^T|
  double trace = 0.0;        // |Tr X - 1|
  double idempotency = 0.0;  // max |X^2 - X|

  double worst() const;
};

MatrixInvariantResiduals matrix_invariant_residuals(const Matrix& x);

// Relative-frequencies matrix x_ij = sqrt(x_i x_j): the rank-one projector
// onto the vector of square-root frequencies.
class FrequencyMatrix {
 public:
  // Throws ValidationError if symmetry, trace or idempotency is off by more
  // than `tol`.
  explicit FrequencyMatrix(Matrix entries, double tol = 1e-10);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Vector frequencies() const { return entries_.diagonal(); }

 private:
  Matrix entries_;
};

FrequencyMatrix build_frequency_matrix(const FrequencyVector& x);

// sqrt(max(x_i, 0) max(x_j, 0)) without any validation.
Matrix frequency_matrix_entries(const Vector& x);

struct LaxOperators {
  Matrix g_sym;   // G + G^T
  Matrix q;       // diag(1/2 sum_k a_ik x_k)
  Matrix lambda;  // [Q, X], antisymmetric
  Matrix theta;   // [Lambda, X]
};

// Lambda_ij = 1/2 (f_i x_ij - x_ji f_j) with f = A diag(X). Uses the current
// entries of X for x_ij and its diagonal for the frequencies.
Matrix lambda_matrix(const Matrix& x, const PayoffMatrix& a);

// Builds all operators at x and enforces Theta == G + G^T (InvariantError
// beyond 1e-8).
LaxOperators lax_operators(const FrequencyVector& x, const PayoffMatrix& a);

struct MatrixTrajectory {
  std::vector<double> times;
  std::vector<Matrix> states;

  std::size_t size() const { return times.size(); }
};

inline constexpr double kMatrixDriftAbort = 1e-4;
inline constexpr double kMatrixDriftAccept = 1e-6;

// RK4 on dX/dt = [Lambda(X), X], Lambda recomputed from diag(X) at every
// stage.
MatrixTrajectory integrate_matrix_flow(const FrequencyVector& x0,
                                       const PayoffMatrix& a,
                                       const StepOptions& options);

// Ascending eigenvalues of a symmetric matrix.
Vector symmetric_spectrum(const Matrix& x);

enum class MatrixEntropyMode {
  kEigen,     // -sum lambda ln lambda over the spectrum of X
  kDiagonal,  // -sum x_ii ln x_ii, ignoring the off-diagonal entries
};

// Note that the eigen mode is identically 0 for every valid frequency matrix,
// since X is a rank-one projector.
double matrix_entropy(const FrequencyMatrix& x, MatrixEntropyMode mode);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_LAX_FORM_HPP_
