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

#ifndef ENTROPY_GAMES_GAME_CORE_HPP_
#define ENTROPY_GAMES_GAME_CORE_HPP_

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "entropy_games/linalg.hpp"

namespace entropy_games {

inline constexpr double kSimplexTolerance = 1e-12;
inline constexpr double kPayoffTieTolerance = 1e-9;

// Payoff matrix of a symmetric two-player game: entry (i, j) is the payoff
// to a player using pure strategy i against an opponent using j.
class PayoffMatrix {
 public:
  explicit PayoffMatrix(Matrix entries);
  PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static PayoffMatrix zero(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

// A point on the probability simplex: strategy frequencies of a population,
// or the weights of a mixed strategy.
class FrequencyVector {
 public:
  // Throws ValidationError unless every entry lies in [-tol, 1 + tol] and the
  // entries sum to 1 within `tol`.
  explicit FrequencyVector(Vector probs, double tol = kSimplexTolerance);
  FrequencyVector(std::initializer_list<double> probs);

  static FrequencyVector uniform(std::size_t n);
  static FrequencyVector vertex(std::size_t n, std::size_t i);

  std::size_t size() const { return static_cast<std::size_t>(probs_.size()); }
  double operator[](std::size_t i) const {
    return probs_(static_cast<Eigen::Index>(i));
  }
  const Vector& values() const { return probs_; }

  // |sum - 1|
  double simplex_drift() const;

 private:
  Vector probs_;
};

// Throws DimensionError naming `what` when `got` != `expected`.
void require_dimension(std::size_t expected, std::size_t got,
                       std::string_view what);

// E(p, q) = sum_ij p_i a_ij q_j.
double expected_payoff(const FrequencyVector& p, const FrequencyVector& q,
                       const PayoffMatrix& a);

// p is a symmetric Nash equilibrium iff no pure strategy earns more than
// E(p, p) + tol against p. Pure deviations suffice because E(., p) is linear.
bool is_nash(const FrequencyVector& p, const PayoffMatrix& a,
             double tol = kPayoffTieTolerance);

// Largest payoff gain max_i E(e_i, p) - E(p, p); <= 0 at an exact equilibrium.
double nash_gap(const FrequencyVector& p, const PayoffMatrix& a);

// Default probe grid resolution: 100 for n <= 2, 50 for n == 3, coarser
// above so the probe count stays bounded.
int default_probe_resolution(std::size_t n);

// Evolutionary stability tested against every alternative r on the simplex
// lattice with spacing 1 / probe_resolution. For each r != p, either
// E(p,p) > E(r,p) + tol, or the first condition ties within tol and
// E(p,r) > E(r,r) + tol.
bool is_ess(const FrequencyVector& p, const PayoffMatrix& a,
            double tol = kPayoffTieTolerance, int probe_resolution = 0);

// All points of the simplex lattice {k / resolution} in dimension n,
// in lexicographic order of their coordinates.
std::vector<FrequencyVector> simplex_grid(std::size_t n, int resolution);

struct SymmetricEquilibrium {
  FrequencyVector strategy;
  bool nash = false;
  bool ess = false;
};

// Lattice points that pass is_nash, each annotated with its ESS status,
// sorted lexicographically. Points closer than 1 / grid_resolution in
// max-norm to an already reported point are dropped.
std::vector<SymmetricEquilibrium> enumerate_symmetric_equilibria(
    const PayoffMatrix& a, int grid_resolution,
    double tol = kPayoffTieTolerance);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_GAME_CORE_HPP_
