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
#include <vector>

#include "doctest.h"
#include "entropy_games/errors.hpp"
#include "entropy_games/thermo.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace entropy_games;
namespace t = entropy_games::testing;

namespace {

const std::vector<double> kTwoLevel{0.0, 1.0};

std::vector<double> random_energies(t::Rng& rng, int max_levels = 16) {
  std::vector<double> e(static_cast<std::size_t>(t::uniform_int(rng, 1, max_levels)));
  for (double& v : e) v = t::uniform(rng, -5, 5);
  return e;
}

}  // namespace

TEST_CASE("gibbs limits and the two-level example") {
  const auto hot = gibbs(kTwoLevel, 0.0);
  CHECK(hot.probs[0] == 0.5);
  CHECK(hot.probs[1] == 0.5);
  CHECK(std::isinf(hot.temperature));

  const auto cold = gibbs(kTwoLevel, 50.0);
  CHECK(cold.probs[0] == doctest::Approx(1.0));
  CHECK(cold.probs[1] < 1e-21);

  // Frozen from NumPy: Z = 1 + e^-1, <E> = e^-1 / Z, S = ln Z + <E>.
  const auto r = gibbs(kTwoLevel, 1.0);
  CHECK(r.z == doctest::Approx(1.3678794411714423).epsilon(1e-14));
  CHECK(r.mean_energy == doctest::Approx(0.2689414213699951).epsilon(1e-14));
  CHECK(r.entropy == doctest::Approx(0.582203108888218).epsilon(1e-14));
  CHECK(r.energy_variance == doctest::Approx(0.19661193324148185).epsilon(1e-13));
  CHECK(r.temperature == 1.0);

  CHECK_THROWS_AS(gibbs(std::vector<double>{}, 1.0), ValidationError);
  CHECK_THROWS_AS(gibbs(std::vector<double>{0.0, INFINITY}, 1.0), ValidationError);
}

TEST_CASE("gibbs survives extreme beta") {
  const std::vector<double> e{0.0, 1.0, 2.0};
  const auto r = gibbs(e, 700.0);
  CHECK(r.probs[0] == doctest::Approx(1.0));
  CHECK(std::isfinite(r.log_z));
  const auto inverted = gibbs(e, -700.0);
  CHECK(inverted.probs[2] == doctest::Approx(1.0));
  CHECK(std::isfinite(inverted.entropy));
}

TEST_CASE("gibbs identities on random ensembles") {
  auto rng = t::make_rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto e = random_energies(rng);
    const double beta = t::uniform(rng, -10, 10);
    const auto r = gibbs(e, beta);
    double sum = 0.0;
    double shannon = 0.0;
    for (double p : r.probs) {
      sum += p;
      if (p > 0) shannon -= p * std::log(p);
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(std::abs(r.entropy - (std::log(r.z) + beta * r.mean_energy)) < 1e-12);
    CHECK(std::abs(r.entropy - shannon) < 1e-12);
    CHECK(r.energy_variance >= 0.0);

    const auto uniform = gibbs(e, 0.0);
    for (double p : uniform.probs) CHECK(p == 1.0 / static_cast<double>(e.size()));

    if (std::abs(beta) < 3) {
      const auto naive = oracle::naive_gibbs(e, beta);
      CHECK(std::abs(r.mean_energy - naive.mean) < 1e-10);
      CHECK(std::abs(r.energy_variance - naive.var) < 1e-9);
    }
  }
}

TEST_CASE("entropy derivatives") {
  CHECK(entropy_derivatives(kTwoLevel, 0.0).ds_dbeta == 0.0);
  const auto d = entropy_derivatives(kTwoLevel, 1.0);
  CHECK(d.ds_dbeta == doctest::Approx(-0.19661193324148185).epsilon(1e-13));
  REQUIRE(d.ds_de.has_value());
  CHECK(*d.ds_de == 1.0);

  const auto flat = entropy_derivatives(std::vector<double>{2.0, 2.0, 2.0}, 1.3);
  CHECK_FALSE(flat.ds_de.has_value());
  CHECK_FALSE(flat.d2s_de2.has_value());
}

TEST_CASE("entropy derivatives against finite differences") {
  auto rng = t::make_rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    auto e = random_energies(rng, 8);
    e.push_back(e.front() + 1.0);  // never flat
    const double beta = t::uniform(rng, -3, 3);
    const auto d = entropy_derivatives(e, beta);
    const auto entropy = [&](double b) { return gibbs(e, b).entropy; };
    const auto mean = [&](double b) { return gibbs(e, b).mean_energy; };
    CHECK(std::abs(d.ds_dbeta - oracle::central_difference(entropy, beta, 1e-5)) < 1e-6);
    CHECK(std::abs(d.d2s_dbeta2 - oracle::second_difference(entropy, beta, 1e-4)) < 1e-4);

    // Along the curve (<E>(b), S(b)): dS = b dE, and d2S/dE2 = db/dE.
    const double h = 1e-5;
    const double de = mean(beta + h) - mean(beta - h);
    const double ds = entropy(beta + h) - entropy(beta - h);
    REQUIRE(d.ds_de.has_value());
    CHECK(*d.ds_de == beta);
    CHECK(std::abs(ds - *d.ds_de * de) < 1e-9);
    CHECK(*d.d2s_de2 == doctest::Approx(2 * h / de).epsilon(1e-4));
  }
}

TEST_CASE("mean energy decreases with beta") {
  auto rng = t::make_rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    auto e = random_energies(rng, 8);
    e.push_back(e.front() + 0.5);
    double previous = INFINITY;
    for (double beta = -5; beta <= 5; beta += 0.05) {
      const auto g = gibbs(e, beta);
      const double m = g.mean_energy;
      if (g.energy_variance > 1e-10) {
        CHECK(m < previous);
      } else {
        CHECK(m <= previous);  // saturated at a band edge
      }
      previous = m;
    }
  }
}

TEST_CASE("fit beta") {
  CHECK(fit_beta(kTwoLevel, 0.5, 1e-12) == 0.0);
  CHECK(fit_beta(kTwoLevel, 0.2689414213699951, 1e-12) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit_beta(kTwoLevel, 0.9, 1e-12) < 0.0);
  CHECK_THROWS_AS(fit_beta(kTwoLevel, 1.0, 1e-12), ValidationError);
  CHECK_THROWS_AS(fit_beta(kTwoLevel, -0.1, 1e-12), ValidationError);
  CHECK_THROWS_AS(fit_beta(std::vector<double>{1.0, 1.0}, 1.0, 1e-12), ValidationError);
  CHECK_THROWS_AS(fit_beta(kTwoLevel, 0.3, 0.0), ValidationError);

  auto rng = t::make_rng(64);
  for (int trial = 0; trial < 300; ++trial) {
    auto e = random_energies(rng, 8);
    e.push_back(e.front() + 1.0);
    const double beta = t::uniform(rng, -2, 2);
    const double target = gibbs(e, beta).mean_energy;
    const double fitted = fit_beta(e, target, 1e-12);
    CHECK(std::abs(gibbs(e, fitted).mean_energy - target) < 1e-12);
    CHECK(std::abs(fitted - beta) < 1e-6);
  }
}
