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

#ifndef ENTROPY_GAMES_LINALG_HPP_
#define ENTROPY_GAMES_LINALG_HPP_

#include <Eigen/Dense>

#include <complex>

namespace entropy_games {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

template <typename Derived, typename OtherDerived>
auto commutator(const Eigen::MatrixBase<Derived>& a,
                const Eigen::MatrixBase<OtherDerived>& b) {
  return (a * b - b * a).eval();
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_LINALG_HPP_
