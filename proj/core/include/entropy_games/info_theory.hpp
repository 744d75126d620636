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

#ifndef ENTROPY_GAMES_INFO_THEORY_HPP_
#define ENTROPY_GAMES_INFO_THEORY_HPP_

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <utility>

#include "entropy_games/game_core.hpp"
#include "entropy_games/linalg.hpp"

// Information measures over strategy distributions. Everything in this header
// is in bits (base-2 logarithms); use bits_to_nats to convert.
namespace entropy_games {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kInfoTolerance = 1e-10;

inline double bits_to_nats(double bits) { return bits * 0.69314718055994530942; }
inline double nats_to_bits(double nats) { return nats / 0.69314718055994530942; }

// Joint probability x_ij that player A uses strategy i and B uses j.
class JointDistribution {
 public:
  explicit JointDistribution(Matrix probs, double tol = kSimplexTolerance);
  JointDistribution(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return static_cast<std::size_t>(probs_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(probs_.cols()); }
  const Matrix& matrix() const { return probs_; }

 private:
  Matrix probs_;
};

// -sum p log2 p over all entries, 0 log 0 = 0.
double entropy_bits(const Vector& p);
double entropy_bits(const Matrix& p);

// (row sums, column sums): the distributions of A and of B.
std::pair<FrequencyVector, FrequencyVector> marginals(const JointDistribution& j);

struct InfoReport {
  double h_a = 0.0;
  double h_b = 0.0;
  double h_ab = 0.0;
  double h_a_given_b = 0.0;
  double h_b_given_a = 0.0;
  double mutual_information = 0.0;  // H(A:B) = H(A) + H(B) - H(A,B)
};

InfoReport info_report(const JointDistribution& j);

// sum x_i log2 x_i - sum x_i log2 y_i; kInfinity when some x_i > 0 has y_i = 0.
double relative_entropy(const FrequencyVector& x, const FrequencyVector& y);

// Classical Sanov bound 2^(-N H(x||y)) on the probability of confusing x with
// y after N repetitions.
double sanov_confusion_bound(const FrequencyVector& x, const FrequencyVector& y,
                             long long n);

// Row-stochastic channel from B's strategies to C's.
class StochasticKernel {
 public:
  explicit StochasticKernel(Matrix rows, double tol = kSimplexTolerance);
  StochasticKernel(std::initializer_list<std::initializer_list<double>> rows);

  static StochasticKernel identity(std::size_t n);

  std::size_t inputs() const { return static_cast<std::size_t>(rows_.rows()); }
  std::size_t outputs() const { return static_cast<std::size_t>(rows_.cols()); }
  const Matrix& matrix() const { return rows_; }

 private:
  Matrix rows_;
};

// Joint of (A, C) for the chain A -> B -> C: J_AC = J_AB K.
JointDistribution compose(const JointDistribution& j_ab,
                          const StochasticKernel& k_bc);

// Joint of (B, C): diag(p_B) K.
JointDistribution channel_joint(const FrequencyVector& p_b,
                                const StochasticKernel& k_bc);

// H(A | B, C) for p(a, b, c) = J_AB(a, b) K(b, c).
double conditional_entropy_given_pair(const JointDistribution& j_ab,
                                      const StochasticKernel& k_bc);

struct DataProcessingReport {
  double i_ab = 0.0;
  double i_ac = 0.0;
  double i_bc = 0.0;
  // I(A:B) >= I(A:C) and H(A) >= I(A:B), each within 1e-10.
  bool holds = false;
};

DataProcessingReport markov_data_processing_check(const JointDistribution& j_ab,
                                                  const StochasticKernel& k_bc);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_INFO_THEORY_HPP_
