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

#include "entropy_games/equilibration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "entropy_games/replicator_flow.hpp"

namespace entropy_games {

namespace {

double refit_tolerance(const std::vector<double>& energies) {
  const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
  return 1e-14 * std::max(1.0, *hi - *lo);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

EnsembleNode make_node(std::string id, std::vector<double> energies, double beta) {
  EnsembleNode node;
  node.id = std::move(id);
  node.mean_energy = gibbs(energies, beta).mean_energy;
  node.ensemble = CanonicalEnsemble{std::move(energies), beta};
  return node;
}

EnsembleNetwork::EnsembleNetwork(
    std::vector<EnsembleNode> nodes,
    std::vector<std::pair<std::size_t, std::size_t>> edges, double coupling,
    double merge_tol)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      coupling_(coupling),
      merge_tol_(merge_tol) {
  if (nodes_.empty()) throw ValidationError("network has no nodes");
  if (!(coupling_ > 0.0) || !std::isfinite(coupling_)) {
    throw ValidationError("coupling kappa must be positive and finite");
  }
  if (!(merge_tol_ > 0.0) || !std::isfinite(merge_tol_)) {
    throw ValidationError("merge_tol must be positive and finite");
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    auto& node = nodes_[i];
    if (!ids.insert(node.id).second) {
      throw ValidationError("duplicate node id '" + node.id + "'");
    }
    const auto& e = node.ensemble.energies;
    if (e.empty()) throw ValidationError("node '" + node.id + "' has no energies");
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    if (!(*hi > *lo)) {
      throw ValidationError("node '" + node.id +
                            "' has a flat spectrum; its temperature is undefined");
    }
    if (node.ensemble.beta == 0.0 || !std::isfinite(node.ensemble.beta)) {
      throw ValidationError("node '" + node.id +
                            "' needs a finite nonzero beta (finite temperature)");
    }
    node.block_id = i;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges_) {
    if (a >= nodes_.size() || b >= nodes_.size()) {
      throw ValidationError("edge references a missing node");
    }
    if (a == b) throw ValidationError("self-loop on node '" + nodes_[a].id + "'");
    if (!seen.insert(std::minmax(a, b)).second) {
      throw ValidationError("duplicate edge between '" + nodes_[a].id +
                            "' and '" + nodes_[b].id + "'");
    }
  }
}

EnsembleNetwork EnsembleNetwork::from_ids(
    std::vector<EnsembleNode> nodes,
    const std::vector<std::pair<std::string, std::string>>& edges,
    double coupling, double merge_tol) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].id, i);
  std::vector<std::pair<std::size_t, std::size_t>> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw ValidationError("edge [" + a + ", " + b +
                            "] references an unknown node id");
    }
    resolved.emplace_back(ia->second, ib->second);
  }
  return EnsembleNetwork(std::move(nodes), std::move(resolved), coupling,
                         merge_tol);
}

std::size_t EnsembleNetwork::max_degree() const {
  std::vector<std::size_t> degree(nodes_.size(), 0);
  for (const auto& [a, b] : edges_) {
    ++degree[a];
    ++degree[b];
  }
  return *std::max_element(degree.begin(), degree.end());
}

std::size_t EnsembleNetwork::block_count() const {
  std::set<std::size_t> blocks;
  for (const auto& n : nodes_) blocks.insert(n.block_id);
  return blocks.size();
}

double EnsembleNetwork::total_energy() const {
  double total = 0.0;
  for (const auto& n : nodes_) total += n.mean_energy;
  return total;
}

std::vector<double> EnsembleNetwork::temperatures() const {
  std::vector<double> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.temperature());
  return out;
}

double EnsembleNetwork::temperature_spread() const {
  const auto t = temperatures();
  const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
  return *hi - *lo;
}

EnsembleNetwork exchange_step(const EnsembleNetwork& net, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("exchange step dt must be positive and finite");
  }
  const double stability = dt * net.coupling() * static_cast<double>(net.max_degree());
  if (!(stability < 0.5)) {
    std::ostringstream msg;
    msg << "dt * kappa * max_degree = " << stability
        << " violates the stability bound 0.5; use dt < "
        << 0.5 / (net.coupling() * static_cast<double>(net.max_degree()));
    throw ValidationError(msg.str());
  }

  const auto tau = net.temperatures();
  std::vector<double> delta(tau.size(), 0.0);
  for (const auto& [j, k] : net.edges()) {
    const double flux = net.coupling() * (tau[j] - tau[k]) * dt;
    delta[k] += flux;
    delta[j] -= flux;
  }

  EnsembleNetwork next = net;
  auto& nodes = next.mutable_nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (delta[i] == 0.0) continue;
    auto& node = nodes[i];
    const double proposed = node.mean_energy + delta[i];
    const auto& e = node.ensemble.energies;
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    if (!(proposed > *lo && proposed < *hi)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "step rejected: node '" << node.id << "' mean energy " << proposed
          << " leaves its spectrum interval (" << *lo << ", " << *hi
          << "); reduce dt below " << dt;
      throw StepRejected(msg.str());
    }
    double beta = 0.0;
    try {
      beta = fit_beta(e, proposed, refit_tolerance(e));
    } catch (const ValidationError& err) {
      throw StepRejected(std::string("step rejected: ") + err.what());
    }
    if (beta == 0.0) {
      throw StepRejected("step rejected: node '" + node.id +
                         "' reached infinite temperature; reduce dt below " +
                         std::to_string(dt));
    }
    node.mean_energy = proposed;
    node.ensemble.beta = beta;
  }
  return next;
}

EnsembleNetwork merge_blocks(const EnsembleNetwork& net) {
  EnsembleNetwork next = net;
  auto& nodes = next.mutable_nodes();
  std::vector<std::size_t> parent(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) parent[i] = nodes[i].block_id;

  for (const auto& [a, b] : net.edges()) {
    if (std::abs(nodes[a].temperature() - nodes[b].temperature()) >= net.merge_tol()) {
      continue;
    }
    const std::size_t ra = find_root(parent, a);
    const std::size_t rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].block_id = find_root(parent, i);
  }
  return next;
}

EquilibrationHistory run(EnsembleNetwork& net, const EquilibrationOptions& options) {
  if (options.sample_every < 1) {
    throw ValidationError("sample_every must be >= 1");
  }
  const auto times = step_times(StepOptions{options.dt, options.t_end});

  double scale = 0.0;
  for (const auto& n : net.nodes()) scale += std::abs(n.mean_energy);
  if (scale == 0.0) scale = 1.0;
  const double energy0 = net.total_energy();

  EquilibrationHistory history;
  auto sample = [&](double t) {
    const double energy = net.total_energy();
    const double drift = std::abs(energy - energy0) / scale;
    if (drift > kEnergyDriftLimit) {
      std::ostringstream msg;
      msg << "total energy drifted by " << drift << " (relative) at t = " << t;
      throw InvariantError(msg.str());
    }
    history.times.push_back(t);
    history.block_counts.push_back(net.block_count());
    history.temperatures.push_back(net.temperatures());
    history.total_energy.push_back(energy);
  };

  net = merge_blocks(net);
  sample(times.front());
  for (std::size_t k = 1; k < times.size(); ++k) {
    net = exchange_step(net, times[k] - times[k - 1]);
    net = merge_blocks(net);
    if (k % static_cast<std::size_t>(options.sample_every) == 0 ||
        k + 1 == times.size()) {
      sample(times[k]);
    }
  }
  return history;
}

}  // namespace entropy_games
