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


#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cli/io.hpp"
#include "cli/log.hpp"
#include "entropy_games/equilibration.hpp"
#include "entropy_games/errors.hpp"
#include "entropy_games/info_theory.hpp"
#include "entropy_games/lax_form.hpp"
#include "entropy_games/quantum_analogue.hpp"
#include "entropy_games/replicator_flow.hpp"
#include "entropy_games/thermo.hpp"

namespace entropy_games::cli {

namespace fs = std::filesystem;

namespace {

// Multiplier taking nats to the requested unit.
double nat_scale(const RunConfig& cfg) {
  return cfg.log_base == LogBase::kTwo ? 1.0 / std::log(2.0) : 1.0;
}

const char* unit_name(const RunConfig& cfg) {
  return cfg.log_base == LogBase::kTwo ? "bits" : "nats";
}

StepOptions step_options(const RunConfig& cfg) {
  return StepOptions{cfg.dt.value_or(kDefaultStep), cfg.t_end.value_or(0.0)};
}

bool keep_row(const RunConfig& cfg, std::size_t k, std::size_t count) {
  return k % static_cast<std::size_t>(cfg.sample_every) == 0 || k + 1 == count;
}

std::string indexed(const std::string& stem, std::size_t i) {
  return stem + std::to_string(i + 1);
}

std::string written(const fs::path& p) { return " -> " + p.string(); }

int run_analyze(const RunConfig& cfg) {
  const GameInput game = load(cfg.input_path, parse_game);
  const PayoffMatrix& a = game.payoff;
  const int res = cfg.grid_resolution > 0 ? cfg.grid_resolution
                                          : default_probe_resolution(a.size());
  const auto found = enumerate_symmetric_equilibria(a, res, cfg.tol);

  Json list = Json::array();
  std::size_t ess_count = 0;
  for (const auto& e : found) {
    if (e.ess) ++ess_count;
    Json item;
    item["strategy"] = json_vector(e.strategy.values());
    item["nash"] = e.nash;
    item["ess"] = e.ess;
    item["nash_gap"] = json_number(nash_gap(e.strategy, a));
    item["payoff"] = json_number(expected_payoff(e.strategy, e.strategy, a));
    list.push_back(std::move(item));
  }
  Json doc;
  doc["n"] = a.size();
  doc["labels"] = game.labels;
  doc["grid_resolution"] = res;
  doc["tol"] = json_number(cfg.tol);
  doc["equilibria"] = std::move(list);
  const fs::path out = cfg.output_dir / "equilibria.json";
  write_json(out, doc);
  log_info("analyze: " + std::to_string(found.size()) + " equilibria, " +
           std::to_string(ess_count) + " ESS" + written(out));
  return kExitOk;
}

int run_simulate(const RunConfig& cfg) {
  const GameInput game = load(cfg.input_path, parse_game);
  const std::size_t n = game.payoff.size();
  const Trajectory traj = integrate(start_point(cfg, n), game.payoff, step_options(cfg));

  std::vector<std::string> header{"t"};
  for (std::size_t i = 0; i < n; ++i) header.push_back(indexed("x_", i));
  header.push_back("H");
  CsvWriter csv(header);
  const double scale = nat_scale(cfg);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (!keep_row(cfg, k, traj.size())) continue;
    const Vector& x = traj.states[k].values();
    std::vector<double> row(x.begin(), x.end());
    row.push_back(scale * traj.entropies[k]);
    csv.row(traj.times[k], row);
  }
  const fs::path out = cfg.output_dir / "trajectory.csv";
  write_file_atomic(out, csv.str());
  log_info("simulate: " + std::to_string(traj.size()) + " steps, final drift " +
           format_double(traj.states.back().simplex_drift()) + written(out));
  return kExitOk;
}

int run_lax(const RunConfig& cfg) {
  const GameInput game = load(cfg.input_path, parse_game);
  const PayoffMatrix& a = game.payoff;
  const std::size_t n = a.size();
  const FrequencyVector x0 = start_point(cfg, n);
  const StepOptions opts = step_options(cfg);
  const MatrixTrajectory mt = integrate_matrix_flow(x0, a, opts);
  const Trajectory vt = integrate(x0, a, opts);
  if (mt.size() != vt.size()) {
    throw InvariantError("matrix and vector flows disagree on sample times");
  }

  std::vector<std::string> mh{"t"};
  std::vector<std::string> eh{"t"};
  for (std::size_t i = 0; i < n; ++i) {
    eh.push_back(indexed("lambda_", i));
    for (std::size_t j = 0; j < n; ++j) {
      mh.push_back("x_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  CsvWriter matrices(mh);
  CsvWriter spectra(eh);

  double diag_dev = 0.0;
  double invariant = 0.0;
  double spectrum_dev = 0.0;
  double commutator = 0.0;
  for (std::size_t k = 0; k < mt.size(); ++k) {
    const Matrix& x = mt.states[k];
    const Vector eig = symmetric_spectrum(x);
    Vector expected = Vector::Zero(eig.size());
    expected(eig.size() - 1) = 1.0;  // ascending order
    diag_dev = std::max(diag_dev, max_abs(x.diagonal() - vt.states[k].values()));
    invariant = std::max(invariant, matrix_invariant_residuals(x).worst());
    spectrum_dev = std::max(spectrum_dev, max_abs(eig - expected));
    const LaxOperators ops = lax_operators(vt.states[k], a);
    commutator = std::max(
        commutator, max_abs(ops.theta.diagonal() - replicator_rhs(vt.states[k], a)));
    if (!keep_row(cfg, k, mt.size())) continue;
    std::vector<double> row;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(x(i, j));
    }
    matrices.row(mt.times[k], row);
    spectra.row(mt.times[k], std::vector<double>(eig.begin(), eig.end()));
  }

  const FrequencyMatrix last(mt.states.back(), kMatrixDriftAccept);
  const bool ok = diag_dev < kLaxEquivalenceTolerance;
  Json doc;
  doc["samples"] = mt.size();
  doc["t_end"] = json_number(mt.times.back());
  doc["max_diagonal_deviation"] = json_number(diag_dev);
  doc["max_invariant_residual"] = json_number(invariant);
  doc["max_spectrum_deviation"] = json_number(spectrum_dev);
  doc["max_commutator_residual"] = json_number(commutator);
  doc["tolerance"] = json_number(kLaxEquivalenceTolerance);
  doc["diagonal_equivalence"] = ok;
  doc["final_frequencies"] = json_vector(last.frequencies());
  doc["entropy_unit"] = unit_name(cfg);
  doc["final_entropy_eigen"] =
      json_number(nat_scale(cfg) * matrix_entropy(last, MatrixEntropyMode::kEigen));
  doc["final_entropy_diagonal"] =
      json_number(nat_scale(cfg) * matrix_entropy(last, MatrixEntropyMode::kDiagonal));

  write_file_atomic(cfg.output_dir / "matrix_trajectory.csv", matrices.str());
  write_file_atomic(cfg.output_dir / "matrix_eigenvalues.csv", spectra.str());
  const fs::path out = cfg.output_dir / "lax_report.json";
  write_json(out, doc);
  log_info("lax: diagonal deviation " + format_double(diag_dev) + written(out));
  if (!ok) {
    log_error("diagonal of the matrix flow left the replicator trajectory by " +
              format_double(diag_dev));
    return kExitInvariant;
  }
  return kExitOk;
}

Json rate_json(const EntropyRateReport& r, double scale) {
  Json j;
  j["truncated"] = json_number(scale * r.truncated);
  j["exact"] = r.exact ? json_number(scale * *r.exact) : Json(nullptr);
  j["zeta"] = r.zeta ? json_number(scale * *r.zeta) : Json(nullptr);
  return j;
}

int run_quantum(const RunConfig& cfg) {
  const GameInput game = load(cfg.input_path, parse_game);
  const PayoffMatrix& a = game.payoff;
  const std::size_t n = a.size();
  const CorrespondenceResult res =
      run_correspondence(start_point(cfg, n), a, step_options(cfg), cfg.hbar);
  const DensityTrajectory& q = res.quantum;
  const double scale = nat_scale(cfg);

  std::vector<std::string> dh{"t"};
  std::vector<std::string> sh{"t"};
  for (std::size_t i = 0; i < n; ++i) {
    sh.push_back(indexed("lambda_", i));
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      dh.push_back("re_" + ij);
      dh.push_back("im_" + ij);
    }
  }
  sh.push_back("S");
  CsvWriter density(dh);
  CsvWriter spectra(sh);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!keep_row(cfg, k, q.size())) continue;
    const ComplexMatrix& rho = q.states[k];
    std::vector<double> row;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      for (Eigen::Index j = 0; j < rho.cols(); ++j) {
        row.push_back(rho(i, j).real());
        row.push_back(rho(i, j).imag());
      }
    }
    density.row(q.times[k], row);
    const Vector eig = hermitian_spectrum(rho);
    std::vector<double> srow(eig.begin(), eig.end());
    srow.push_back(scale * von_neumann_entropy(rho));
    spectra.row(q.times[k], srow);
  }

  const ReplicatorHamiltonian provider(res.classical, a, cfg.hbar);
  const auto rate_at = [&](std::size_t k) {
    const DensityOperator rho(q.states[k], kDensityDriftAccept);
    return entropy_rate_series(rho, von_neumann_rhs(rho, provider(q.times[k])));
  };
  const DensityOperator final_rho(q.states.back(), kDensityDriftAccept);
  const bool ok = res.max_residual < kCorrespondenceTolerance;

  Json doc;
  doc["samples"] = q.size();
  doc["t_end"] = json_number(q.times.back());
  doc["hbar"] = json_number(cfg.hbar);
  doc["max_residual"] = json_number(res.max_residual);
  doc["tolerance"] = json_number(kCorrespondenceTolerance);
  doc["correspondence"] = ok;
  doc["final_purity"] = json_number(final_rho.purity());
  doc["entropy_unit"] = unit_name(cfg);
  doc["final_entropy"] = json_number(scale * von_neumann_entropy(final_rho));
  doc["entropy_rate_initial"] = rate_json(rate_at(0), scale);
  doc["entropy_rate_final"] = rate_json(rate_at(q.size() - 1), scale);

  write_file_atomic(cfg.output_dir / "density_trajectory.csv", density.str());
  write_file_atomic(cfg.output_dir / "density_spectrum.csv", spectra.str());
  const fs::path out = cfg.output_dir / "quantum_report.json";
  write_json(out, doc);
  log_info("quantum: max correspondence residual " + format_double(res.max_residual) +
           written(out));
  if (!ok) {
    log_error("correspondence residual " + format_double(res.max_residual) +
              " exceeds " + format_double(kCorrespondenceTolerance));
    return kExitInvariant;
  }
  return kExitOk;
}

int run_info(const RunConfig& cfg) {
  const JointDistribution joint = load(cfg.input_path, parse_joint);
  const InfoReport r = info_report(joint);
  const auto [pa, pb] = marginals(joint);
  // The report is computed in bits.
  const double scale = cfg.log_base == LogBase::kTwo ? 1.0 : bits_to_nats(1.0);
  Json doc;
  doc["unit"] = unit_name(cfg);
  doc["h_a"] = json_number(scale * r.h_a);
  doc["h_b"] = json_number(scale * r.h_b);
  doc["h_ab"] = json_number(scale * r.h_ab);
  doc["h_a_given_b"] = json_number(scale * r.h_a_given_b);
  doc["h_b_given_a"] = json_number(scale * r.h_b_given_a);
  doc["mutual_information"] = json_number(scale * r.mutual_information);
  doc["marginal_a"] = json_vector(pa.values());
  doc["marginal_b"] = json_vector(pb.values());
  const fs::path out = cfg.output_dir / "info_report.json";
  write_json(out, doc);
  log_info("info: I(A:B) = " + format_double(scale * r.mutual_information) + " " +
           unit_name(cfg) + written(out));
  return kExitOk;
}

int run_thermo(const RunConfig& cfg) {
  const CanonicalEnsemble ens = load(cfg.input_path, parse_ensemble);
  const EnsembleReport r = gibbs(ens);
  const EntropyDerivatives d = entropy_derivatives(ens.energies, ens.beta);
  const double scale = nat_scale(cfg);
  Json doc;
  doc["beta"] = json_number(ens.beta);
  doc["z"] = json_number(r.z);
  doc["log_z"] = json_number(r.log_z);
  doc["probs"] = json_vector(r.probs);
  doc["mean_energy"] = json_number(r.mean_energy);
  doc["energy_variance"] = json_number(r.energy_variance);
  doc["third_central_moment"] = json_number(r.third_central_moment);
  doc["entropy_unit"] = unit_name(cfg);
  doc["entropy"] = json_number(scale * r.entropy);
  doc["temperature"] = json_number(r.temperature);
  Json der;
  der["ds_de"] = d.ds_de ? json_number(scale * *d.ds_de) : Json(nullptr);
  der["d2s_de2"] = d.d2s_de2 ? json_number(scale * *d.d2s_de2) : Json(nullptr);
  der["ds_dbeta"] = json_number(scale * d.ds_dbeta);
  der["d2s_dbeta2"] = json_number(scale * d.d2s_dbeta2);
  doc["derivatives"] = std::move(der);
  const fs::path out = cfg.output_dir / "ensemble_report.json";
  write_json(out, doc);
  log_info("thermo: S = " + format_double(scale * r.entropy) + " " + unit_name(cfg) +
           written(out));
  return kExitOk;
}

int run_globalize(const RunConfig& cfg) {
  Scenario s = load(cfg.input_path, parse_scenario);
  std::vector<std::string> ids;
  for (const auto& node : s.nodes) ids.push_back(node.id);
  EnsembleNetwork net =
      EnsembleNetwork::from_ids(std::move(s.nodes), s.edges, s.kappa, s.merge_tol);
  EquilibrationOptions opts;
  opts.dt = cfg.dt.value_or(s.dt);
  opts.t_end = cfg.t_end.value_or(s.t_end);
  opts.sample_every = cfg.sample_every;
  if (!(opts.dt > 0.0)) throw ValidationError("scenario dt must be positive");
  if (!(opts.t_end >= 0.0)) throw ValidationError("scenario t_end must be >= 0");
  const EquilibrationHistory h = run(net, opts);

  std::vector<std::string> header{"t", "block_count", "total_energy"};
  for (const auto& id : ids) header.push_back("tau_" + id);
  CsvWriter csv(header);
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::vector<double> row{static_cast<double>(h.block_counts[k]), h.total_energy[k]};
    row.insert(row.end(), h.temperatures[k].begin(), h.temperatures[k].end());
    csv.row(h.times[k], row);
  }
  const fs::path out = cfg.output_dir / "history.csv";
  write_file_atomic(out, csv.str());
  log_info("globalize: " + std::to_string(net.block_count()) + " block(s), spread " +
           format_double(net.temperature_spread()) + written(out));
  return kExitOk;
}

}  // namespace

FrequencyVector start_point(const RunConfig& cfg, std::size_t n) {
  if (cfg.random_x0) {
    std::mt19937_64 rng(cfg.seed);
    std::gamma_distribution<double> gamma(1.0, 1.0);
    Vector v(static_cast<Eigen::Index>(n));
    for (double& x : v) x = gamma(rng);
    return FrequencyVector(v / v.sum());
  }
  if (cfg.x0.empty()) return FrequencyVector::uniform(n);
  require_dimension(n, cfg.x0.size(), "--x0");
  Vector v = Eigen::Map<const Vector>(cfg.x0.data(), static_cast<Eigen::Index>(n));
  // Accept hand-typed decimals, then put the point back on the simplex.
  const FrequencyVector checked(v, 1e-9);
  (void)checked;
  v = v.cwiseMax(0.0);
  return FrequencyVector(v / v.sum());
}

int run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kAnalyze: return run_analyze(cfg);
    case Command::kSimulate: return run_simulate(cfg);
    case Command::kLax: return run_lax(cfg);
    case Command::kQuantum: return run_quantum(cfg);
    case Command::kInfo: return run_info(cfg);
    case Command::kThermo: return run_thermo(cfg);
    case Command::kGlobalize: return run_globalize(cfg);
  }
  throw ValidationError("unknown command");
}

}  // namespace entropy_games::cli
