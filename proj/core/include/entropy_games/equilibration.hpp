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

#ifndef ENTROPY_GAMES_EQUILIBRATION_HPP_
#define ENTROPY_GAMES_EQUILIBRATION_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entropy_games/errors.hpp"
#include "entropy_games/thermo.hpp"

// A network of canonical ensembles that exchange mean energy with their
// neighbours and merge into common-temperature blocks.
//
// This is a model, not a derivation: the flux law, the explicit Euler step
// and the merge criterion are choices made here. Energy is the conserved
// quantity; each node's temperature is recovered by refitting beta to its
// mean energy after every exchange.
namespace entropy_games {

struct EnsembleNode {
  std::string id;
  CanonicalEnsemble ensemble;
  // Authoritative state of the node: the exchanged, conserved quantity.
  // ensemble.beta is derived from it.
  double mean_energy = 0.0;
  std::size_t block_id = 0;

  double temperature() const { return 1.0 / ensemble.beta; }
};

// Builds a node at the given beta; mean_energy is read off the Gibbs state.
EnsembleNode make_node(std::string id, std::vector<double> energies, double beta);

class EnsembleNetwork {
 public:
  // Every node starts in its own block (block_id = its index). Edges refer to
  // node indices. Throws ValidationError on self-loops, dangling edges,
  // duplicate ids, non-positive coupling or merge tolerance.
  EnsembleNetwork(std::vector<EnsembleNode> nodes,
                  std::vector<std::pair<std::size_t, std::size_t>> edges,
                  double coupling, double merge_tol);

  // Same, with edges given as pairs of node ids.
  static EnsembleNetwork from_ids(
      std::vector<EnsembleNode> nodes,
      const std::vector<std::pair<std::string, std::string>>& edges,
      double coupling, double merge_tol);

  const std::vector<EnsembleNode>& nodes() const { return nodes_; }
  std::vector<EnsembleNode>& mutable_nodes() { return nodes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  double coupling() const { return coupling_; }
  double merge_tol() const { return merge_tol_; }

  std::size_t max_degree() const;
  std::size_t block_count() const;
  double total_energy() const;
  std::vector<double> temperatures() const;
  // max tau - min tau
  double temperature_spread() const;

 private:
  std::vector<EnsembleNode> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  double coupling_;
  double merge_tol_;
};

// Thrown when a proposed mean energy leaves a node's spectrum interval.
class StepRejected : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// One explicit Euler step of d<E>_k/dt = kappa sum_j (tau_j - tau_k) over the
// neighbours j of k, followed by a beta refit per node. Requires
// dt * kappa * max_degree < 0.5.
EnsembleNetwork exchange_step(const EnsembleNetwork& net, double dt);

// Unions the blocks of every edge whose temperatures differ by less than
// merge_tol. Labels are the smallest node index in each block; blocks never
// split.
EnsembleNetwork merge_blocks(const EnsembleNetwork& net);

struct EquilibrationOptions {
  double dt = 1e-3;
  double t_end = 0.0;
  int sample_every = 1;
};

struct EquilibrationHistory {
  std::vector<double> times;
  std::vector<std::size_t> block_counts;
  std::vector<std::vector<double>> temperatures;  // [sample][node]
  std::vector<double> total_energy;

  std::size_t size() const { return times.size(); }
};

inline constexpr double kEnergyDriftLimit = 1e-9;

// merge_blocks at t = 0, then alternating exchange_step / merge_blocks until
// t_end. Samples at t = 0, every `sample_every` steps, and at the final
// time. `net` is advanced in place to the final state. Throws InvariantError
// if the relative total-energy drift exceeds kEnergyDriftLimit.
EquilibrationHistory run(EnsembleNetwork& net, const EquilibrationOptions& options);

}  // namespace entropy_games

#endif  // ENTROPY_GAMES_EQUILIBRATION_HPP_
