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

#include <cmath>

#include "doctest.h"
#include "entropy_games/errors.hpp"
#include "entropy_games/lax_form.hpp"
#include "entropy_games/quantum_analogue.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace entropy_games;
namespace t = entropy_games::testing;

namespace {

const PayoffMatrix kPrisoners{{3, 0}, {5, 1}};
const PayoffMatrix kHawkDove{{-1, 2}, {0, 1}};

ComplexMatrix diag(std::initializer_list<double> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return Matrix(v.asDiagonal()).cast<Complex>();
}

}  // namespace

TEST_CASE("density operator validation") {
  CHECK_NOTHROW((void)DensityOperator(diag({0.3, 0.7})));
  CHECK_THROWS_AS((void)DensityOperator(diag({0.3, 0.6})), ValidationError);
  CHECK_THROWS_AS((void)DensityOperator(diag({1.2, -0.2})), ValidationError);
  ComplexMatrix non_herm = diag({0.5, 0.5});
  non_herm(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS((void)DensityOperator(non_herm), ValidationError);
  CHECK_THROWS_AS((void)Hamiltonian(non_herm), ValidationError);
  CHECK_THROWS_AS((void)Hamiltonian(diag({1, 2}), 0.0), ValidationError);
}

TEST_CASE("quantization map") {
  CHECK(max_abs(quantize({1, 0}).matrix() - diag({1, 0})) == 0.0);
  const auto rho = quantize({0.25, 0.75});
  CHECK(rho.matrix()(0, 1).real() == doctest::Approx(0.4330127018922193).epsilon(1e-15));
  CHECK(rho.matrix()(1, 0).imag() == 0.0);
  const auto uniform = quantize(FrequencyVector::uniform(3));
  CHECK((uniform.matrix().real().array() - 1.0 / 3.0).abs().maxCoeff() < 1e-15);

  auto rng = t::make_rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = t::random_simplex(rng, static_cast<std::size_t>(t::uniform_int(rng, 2, 6)));
    const auto q = quantize(x);
    CHECK(max_abs(q.matrix().real() - build_frequency_matrix(x).matrix()) <= 1e-15);
    CHECK(std::abs(q.purity() - 1.0) < 1e-12);
  }
}

TEST_CASE("hamiltonian from lambda") {
  CHECK(hamiltonian_from_lambda(Matrix::Zero(2, 2)).matrix().isZero());
  Matrix lambda(2, 2);
  lambda << 0, -0.375, 0.375, 0;
  const auto h = hamiltonian_from_lambda(lambda);
  CHECK(h.matrix()(0, 1) == Complex(0, -0.375));
  CHECK(h.matrix()(1, 0) == Complex(0, 0.375));
  CHECK(h.matrix()(0, 0) == Complex(0, 0));
  CHECK(max_abs(h.matrix() - h.matrix().adjoint()) == 0.0);
  CHECK_THROWS_AS(hamiltonian_from_lambda(Matrix::Identity(2, 2)), ValidationError);
  CHECK_THROWS_AS(hamiltonian_from_lambda(lambda, -1.0), ValidationError);
}

TEST_CASE("von neumann vector field") {
  CHECK(von_neumann_rhs(diag({0.3, 0.7}), Hamiltonian(diag({1.0, -2.0}))).isZero());
  auto rng = t::make_rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(2 + trial % 3);
    const auto a = t::random_game(rng, n);
    const auto x = t::random_simplex(rng, n);
    const double hbar = t::uniform(rng, 0.1, 3.0);
    const auto ops = lax_operators(x, a);
    const auto h = hamiltonian_from_lambda(ops.lambda, hbar);
    const auto rho = quantize(x);
    const ComplexMatrix rhs = von_neumann_rhs(rho, h);
    CHECK(max_abs(rhs - rhs.adjoint()) < 1e-12);
    CHECK(std::abs(rhs.trace()) < 1e-12);
    // i hbar Lambda turns the von Neumann field into the Lax field.
    CHECK(max_abs(rhs - ops.theta.cast<Complex>()) < 1e-12);
    const auto mixed = ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(n)) /
                       static_cast<double>(n);
    CHECK(max_abs(von_neumann_rhs(mixed, h)) < 1e-15);
  }
}

TEST_CASE("von neumann integration") {
  SUBCASE("zero Hamiltonian") {
    const auto rho0 = quantize({0.3, 0.7});
    const auto traj = integrate_von_neumann(
        rho0, [](double) { return Hamiltonian(ComplexMatrix::Zero(2, 2)); }, {1e-2, 1});
    for (const auto& r : traj.states) CHECK(max_abs(r - rho0.matrix()) == 0.0);
  }
  SUBCASE("maximally mixed state never moves") {
    const DensityOperator rho0(diag({0.5, 0.5}));
    const auto traj = integrate_von_neumann(
        rho0,
        [](double t) {
          ComplexMatrix h(2, 2);
          h << std::cos(t), Complex(0.3, t), Complex(0.3, -t), -1.0;
          return Hamiltonian(h);
        },
        {1e-2, 2});
    for (const auto& r : traj.states) CHECK(max_abs(r - rho0.matrix()) < 1e-15);
  }
  SUBCASE("spectrum and entropy conserved under a time-dependent field") {
    auto rng = t::make_rng(43);
    const DensityOperator rho0(t::random_density_matrix(rng, 3));
    const double s0 = von_neumann_entropy(rho0);
    const Vector spec0 = hermitian_spectrum(rho0.matrix());
    const ComplexMatrix base = t::random_density_matrix(rng, 3);
    const auto traj = integrate_von_neumann(
        rho0, [&](double t) { return Hamiltonian(std::sin(t) * base); }, {1e-3, 3});
    for (const auto& r : traj.states) {
      CHECK(max_abs(hermitian_spectrum(r) - spec0) < 1e-6);
      CHECK(std::abs(von_neumann_entropy(r) - s0) < 1e-6);
    }
  }
  SUBCASE("classical correspondence for t <= 5") {
    for (const auto& a : {kHawkDove, kPrisoners}) {
      const auto result = run_correspondence({0.9, 0.1}, a, {1e-3, 5});
      CHECK(result.max_residual < 1e-6);
      CHECK(result.residuals.size() == result.classical.size());
    }
  }
}

TEST_CASE("replicator hamiltonian interpolates the reference trajectory") {
  const auto traj = integrate({0.9, 0.1}, kHawkDove, {1e-2, 1});
  const auto fine = integrate({0.9, 0.1}, kHawkDove, {5e-3, 1});
  const ReplicatorHamiltonian provider(traj, kHawkDove);
  for (std::size_t k = 0; k < fine.size(); ++k) {
    CHECK(max_abs(provider.state_at(fine.times[k]) - fine.states[k].values()) < 1e-7);
  }
  CHECK_THROWS_AS(provider.state_at(2.0), ValidationError);
}

TEST_CASE("von neumann entropy") {
  for (int n = 2; n <= 5; ++n) {
    const auto mixed = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    CHECK(von_neumann_entropy(DensityOperator(mixed)) == doctest::Approx(std::log(n)));
  }
  CHECK(std::abs(von_neumann_entropy(quantize({0.2, 0.3, 0.5}))) < 1e-12);
  CHECK(von_neumann_entropy(DensityOperator(diag({0.25, 0.75}))) ==
        doctest::Approx(0.5623351446188083).epsilon(1e-14));
}

TEST_CASE("von neumann entropy is concave over mixtures") {
  auto rng = t::make_rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = t::uniform_int(rng, 2, 5);
    const int parts = t::uniform_int(rng, 2, 4);
    const Vector w = t::random_simplex_values(rng, static_cast<std::size_t>(parts));
    ComplexMatrix mix = ComplexMatrix::Zero(n, n);
    double average = 0.0;
    for (int p = 0; p < parts; ++p) {
      const Vector d = t::random_simplex_values(rng, static_cast<std::size_t>(n));
      const ComplexMatrix rho = Matrix(d.asDiagonal()).cast<Complex>();
      mix += w(p) * rho;
      average += w(p) * von_neumann_entropy(rho);
    }
    CHECK(von_neumann_entropy(mix) >= average - 1e-10);
  }
}

TEST_CASE("entropy rate series report") {
  SUBCASE("no motion") {
    const auto r = entropy_rate_series(DensityOperator(diag({0.6, 0.4})), ComplexMatrix::Zero(2, 2));
    CHECK(r.truncated == 0.0);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 0.0);
    CHECK(*r.zeta == 0.0);
  }
  SUBCASE("diagonal hand example") {
    const auto r = entropy_rate_series(DensityOperator(diag({0.6, 0.4})), diag({0.01, -0.01}));
    // Frozen: NumPy trace evaluation of the four sums, and -0.01 ln 1.5.
    CHECK(r.truncated == doctest::Approx(-0.005026666666666669).epsilon(1e-13));
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == doctest::Approx(-0.004054651081081644).epsilon(1e-13));
    CHECK(*r.zeta == doctest::Approx(*r.exact - r.truncated));
  }
  SUBCASE("singular eigenvalue with nonzero rate is flagged") {
    const auto r = entropy_rate_series(DensityOperator(diag({1.0, 0.0})), diag({-0.01, 0.01}));
    CHECK_FALSE(r.exact.has_value());
    CHECK_FALSE(r.zeta.has_value());
  }
  SUBCASE("truncated branch equals the term-by-term sums") {
    auto rng = t::make_rng(45);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = t::uniform_int(rng, 2, 5);
      const DensityOperator rho(t::random_density_matrix(rng, n));
      ComplexMatrix dot = t::random_density_matrix(rng, n) - t::random_density_matrix(rng, n);
      dot = 0.5 * (dot + dot.adjoint()).eval();
      dot -= dot.trace() / static_cast<double>(n) * ComplexMatrix::Identity(n, n);
      const auto r = entropy_rate_series(rho, dot);
      CHECK(std::abs(r.truncated - oracle::entropy_rate_four_sums(rho.matrix(), dot)) < 1e-12);
    }
  }
  SUBCASE("exact branch matches finite differences along a mixing path") {
    auto rng = t::make_rng(46);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = t::uniform_int(rng, 2, 4);
      const ComplexMatrix a = t::random_density_matrix(rng, n);
      const ComplexMatrix b = t::random_density_matrix(rng, n);
      const auto path = [&](double s) -> ComplexMatrix { return (1 - s) * a + s * b; };
      const double s = t::uniform(rng, 0.2, 0.8);
      const double h = 1e-5;
      const double fd = (von_neumann_entropy(path(s + h)) - von_neumann_entropy(path(s - h))) / (2 * h);
      const auto r = entropy_rate_series(DensityOperator(path(s)), b - a);
      REQUIRE(r.exact.has_value());
      CHECK(std::abs(*r.exact - fd) < 1e-6);
    }
  }
  CHECK_THROWS_AS(entropy_rate_series(DensityOperator(diag({0.5, 0.5})), diag({0.1, 0.1})),
                  ValidationError);
}
