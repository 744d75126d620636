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

#include "entropy_games/info_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entropy_games/errors.hpp"

namespace entropy_games {

namespace {

Matrix rows_to_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = m == 0 ? Eigen::Index{0}
                        : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix out(m, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError("ragged matrix: row " + std::to_string(i) +
                            " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
    }
    Eigen::Index j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

double plogp_bits(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

JointDistribution::JointDistribution(Matrix probs, double tol)
    : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw ValidationError("joint distribution is empty");
  if (!probs_.allFinite() || probs_.minCoeff() < 0.0) {
    throw ValidationError("joint probabilities must be finite and >= 0");
  }
  if (std::abs(probs_.sum() - 1.0) > tol) {
    throw ValidationError("joint probabilities sum to " +
                          std::to_string(probs_.sum()) + ", expected 1");
  }
}

JointDistribution::JointDistribution(
    std::initializer_list<std::initializer_list<double>> rows)
    : JointDistribution(rows_to_matrix(rows)) {}

double entropy_bits(const Vector& p) {
  double h = 0.0;
  for (double v : p) h -= plogp_bits(v);
  return h;
}

double entropy_bits(const Matrix& p) {
  double h = 0.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) h -= plogp_bits(p(i, j));
  }
  return h;
}

std::pair<FrequencyVector, FrequencyVector> marginals(const JointDistribution& j) {
  // Row/column sums can round a few ulps away from 1 for large tables.
  constexpr double tol = 1e-11;
  return {FrequencyVector(j.matrix().rowwise().sum(), tol),
          FrequencyVector(j.matrix().colwise().sum().transpose(), tol)};
}

InfoReport info_report(const JointDistribution& j) {
  const auto [a, b] = marginals(j);
  InfoReport r;
  r.h_a = entropy_bits(a.values());
  r.h_b = entropy_bits(b.values());
  r.h_ab = entropy_bits(j.matrix());
  r.h_a_given_b = r.h_ab - r.h_b;
  r.h_b_given_a = r.h_ab - r.h_a;
  r.mutual_information = r.h_a + r.h_b - r.h_ab;
  return r;
}

double relative_entropy(const FrequencyVector& x, const FrequencyVector& y) {
  require_dimension(x.size(), y.size(), "second distribution y");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0) continue;
    if (y[i] <= 0.0) return kInfinity;
    d += x[i] * (std::log2(x[i]) - std::log2(y[i]));
  }
  // Mathematically >= 0; rounding can leave a few ulps below.
  return std::max(d, 0.0);
}

double sanov_confusion_bound(const FrequencyVector& x, const FrequencyVector& y,
                             long long n) {
  if (n < 0) throw ValidationError("repetition count N must be >= 0");
  if (n == 0) return 1.0;
  const double d = relative_entropy(x, y);
  if (std::isinf(d)) return 0.0;
  return std::exp2(-static_cast<double>(n) * d);
}

StochasticKernel::StochasticKernel(Matrix rows, double tol)
    : rows_(std::move(rows)) {
  if (rows_.size() == 0) throw ValidationError("kernel is empty");
  if (!rows_.allFinite() || rows_.minCoeff() < 0.0) {
    throw ValidationError("kernel entries must be finite and >= 0");
  }
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    const double s = rows_.row(i).sum();
    if (std::abs(s - 1.0) > tol) {
      throw ValidationError("kernel is not row-stochastic: row " +
                            std::to_string(i) + " sums to " +
                            std::to_string(s));
    }
  }
}

StochasticKernel::StochasticKernel(
    std::initializer_list<std::initializer_list<double>> rows)
    : StochasticKernel(rows_to_matrix(rows)) {}

StochasticKernel StochasticKernel::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return StochasticKernel(Matrix::Identity(k, k));
}

JointDistribution compose(const JointDistribution& j_ab,
                          const StochasticKernel& k_bc) {
  require_dimension(j_ab.cols(), k_bc.inputs(), "kernel input space");
  return JointDistribution(j_ab.matrix() * k_bc.matrix(), 1e-11);
}

JointDistribution channel_joint(const FrequencyVector& p_b,
                                const StochasticKernel& k_bc) {
  require_dimension(p_b.size(), k_bc.inputs(), "kernel input space");
  return JointDistribution(p_b.values().asDiagonal() * k_bc.matrix(), 1e-11);
}

double conditional_entropy_given_pair(const JointDistribution& j_ab,
                                      const StochasticKernel& k_bc) {
  require_dimension(j_ab.cols(), k_bc.inputs(), "kernel input space");
  const Matrix& j = j_ab.matrix();
  const Matrix& k = k_bc.matrix();
  // H(A,B,C) - H(B,C), with p(b,c) = p(b) K(b,c).
  double h_abc = 0.0;
  for (Eigen::Index a = 0; a < j.rows(); ++a) {
    for (Eigen::Index b = 0; b < j.cols(); ++b) {
      for (Eigen::Index c = 0; c < k.cols(); ++c) {
        h_abc -= plogp_bits(j(a, b) * k(b, c));
      }
    }
  }
  const Vector p_b = j.colwise().sum().transpose();
  const Matrix p_bc = p_b.asDiagonal() * k;
  return h_abc - entropy_bits(p_bc);
}

DataProcessingReport markov_data_processing_check(const JointDistribution& j_ab,
                                                  const StochasticKernel& k_bc) {
  const InfoReport ab = info_report(j_ab);
  const InfoReport ac = info_report(compose(j_ab, k_bc));
  const InfoReport bc = info_report(channel_joint(marginals(j_ab).second, k_bc));

  DataProcessingReport r;
  r.i_ab = ab.mutual_information;
  r.i_ac = ac.mutual_information;
  r.i_bc = bc.mutual_information;
  r.holds = r.i_ab >= r.i_ac - kInfoTolerance &&
            ab.h_a >= r.i_ab - kInfoTolerance;
  return r;
}

}  // namespace entropy_games
