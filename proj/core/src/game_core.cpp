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

#include "entropy_games/game_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "entropy_games/errors.hpp"

namespace entropy_games {

namespace {

Matrix matrix_from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw ValidationError("payoff matrix must be square: row " +
                            std::to_string(i) + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(n));
    }
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Visits every vector of non-negative integers of length n summing to
// `total`, in lexicographic order.
void for_each_composition(std::size_t n, int total,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == n) {
      parts[idx] = left;
      fn(parts);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      parts[idx] = k;
      rec(idx + 1, left - k);
    }
  };
  rec(0, total);
}

Vector lattice_point(const std::vector<int>& parts, int resolution) {
  Vector r(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    r(static_cast<Eigen::Index>(i)) =
        static_cast<double>(parts[i]) / static_cast<double>(resolution);
  }
  return r;
}

}  // namespace

PayoffMatrix::PayoffMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw ValidationError("payoff matrix must be square with n >= 1, got " +
                          std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) {
    throw ValidationError("payoff matrix entries must be finite");
  }
}

PayoffMatrix::PayoffMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : PayoffMatrix(matrix_from_rows(rows)) {}

PayoffMatrix PayoffMatrix::zero(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return PayoffMatrix(Matrix::Zero(k, k));
}

FrequencyVector::FrequencyVector(Vector probs, double tol)
    : probs_(std::move(probs)) {
  if (probs_.size() < 1) {
    throw ValidationError("frequency vector must have at least one entry");
  }
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    const double v = probs_(i);
    if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
      throw ValidationError("frequency entry " + std::to_string(i) + " = " +
                            std::to_string(v) + " lies outside [0, 1]");
    }
  }
  if (simplex_drift() > tol) {
    throw ValidationError("frequency vector sums to " +
                          std::to_string(probs_.sum()) + ", expected 1");
  }
}

FrequencyVector::FrequencyVector(std::initializer_list<double> probs)
    : FrequencyVector(Eigen::Map<const Vector>(
          probs.begin(), static_cast<Eigen::Index>(probs.size()))) {}

FrequencyVector FrequencyVector::uniform(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return FrequencyVector(Vector::Constant(k, 1.0 / static_cast<double>(n)));
}

FrequencyVector FrequencyVector::vertex(std::size_t n, std::size_t i) {
  if (i >= n) throw ValidationError("vertex index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return FrequencyVector(std::move(v));
}

double FrequencyVector::simplex_drift() const {
  return std::abs(probs_.sum() - 1.0);
}

void require_dimension(std::size_t expected, std::size_t got,
                       std::string_view what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + " has dimension " +
                         std::to_string(got) + ", expected " +
                         std::to_string(expected));
  }
}

double expected_payoff(const FrequencyVector& p, const FrequencyVector& q,
                       const PayoffMatrix& a) {
  require_dimension(a.size(), p.size(), "first strategy p");
  require_dimension(a.size(), q.size(), "second strategy q");
  return p.values().dot(a.matrix() * q.values());
}

double nash_gap(const FrequencyVector& p, const PayoffMatrix& a) {
  require_dimension(a.size(), p.size(), "strategy p");
  const Vector pure = a.matrix() * p.values();
  return pure.maxCoeff() - p.values().dot(pure);
}

bool is_nash(const FrequencyVector& p, const PayoffMatrix& a, double tol) {
  if (tol < 0) throw ValidationError("tolerance must be non-negative");
  return nash_gap(p, a) <= tol;
}

int default_probe_resolution(std::size_t n) {
  if (n <= 2) return 100;
  if (n == 3) return 50;
  if (n == 4) return 25;
  return 10;
}

bool is_ess(const FrequencyVector& p, const PayoffMatrix& a, double tol,
            int probe_resolution) {
  require_dimension(a.size(), p.size(), "strategy p");
  if (tol < 0) throw ValidationError("tolerance must be non-negative");
  if (probe_resolution == 0) probe_resolution = default_probe_resolution(p.size());
  if (probe_resolution < 2) {
    throw ValidationError("probe resolution must be >= 2, got " +
                          std::to_string(probe_resolution));
  }

  const Matrix& m = a.matrix();
  const Vector& pv = p.values();
  const Vector ap = m * pv;
  const double e_pp = pv.dot(ap);

  bool stable = true;
  for_each_composition(p.size(), probe_resolution, [&](const std::vector<int>& parts) {
    if (!stable) return;
    const Vector r = lattice_point(parts, probe_resolution);
    if ((r - pv).cwiseAbs().maxCoeff() <= kSimplexTolerance) return;
    const double e_rp = r.dot(ap);
    if (e_pp > e_rp + tol) return;
    if (std::abs(e_pp - e_rp) <= tol) {
      const Vector ar = m * r;
      if (pv.dot(ar) > r.dot(ar) + tol) return;
    }
    stable = false;
  });
  return stable;
}

std::vector<FrequencyVector> simplex_grid(std::size_t n, int resolution) {
  if (n < 1) throw ValidationError("simplex dimension must be >= 1");
  if (resolution < 1) throw ValidationError("grid resolution must be >= 1");
  std::vector<FrequencyVector> out;
  for_each_composition(n, resolution, [&](const std::vector<int>& parts) {
    out.emplace_back(lattice_point(parts, resolution));
  });
  return out;
}

std::vector<SymmetricEquilibrium> enumerate_symmetric_equilibria(
    const PayoffMatrix& a, int grid_resolution, double tol) {
  if (grid_resolution < 2) {
    throw ValidationError("grid resolution must be >= 2, got " +
                          std::to_string(grid_resolution));
  }
  const double min_separation = 1.0 / static_cast<double>(grid_resolution);
  // Lattice neighbours sit exactly min_separation apart; the slack keeps them
  // distinct under rounding.
  const double dedup_radius = min_separation * (1.0 - 1e-9);

  std::vector<SymmetricEquilibrium> found;
  for (auto& point : simplex_grid(a.size(), grid_resolution)) {
    if (!is_nash(point, a, tol)) continue;
    const bool duplicate =
        std::any_of(found.begin(), found.end(), [&](const SymmetricEquilibrium& e) {
          return (e.strategy.values() - point.values()).cwiseAbs().maxCoeff() <
                 dedup_radius;
        });
    if (duplicate) continue;
    const bool ess = is_ess(point, a, tol);
    found.push_back({std::move(point), true, ess});
  }
  // simplex_grid already walks the lattice lexicographically; keep the
  // ordering explicit in case the traversal changes.
  std::stable_sort(found.begin(), found.end(),
                   [](const SymmetricEquilibrium& l, const SymmetricEquilibrium& r) {
                     const Vector& a = l.strategy.values();
                     const Vector& b = r.strategy.values();
                     return std::lexicographical_compare(a.begin(), a.end(),
                                                         b.begin(), b.end());
                   });
  return found;
}

}  // namespace entropy_games
