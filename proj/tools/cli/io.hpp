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


// Input formats, number formatting and atomic file output.

#ifndef ENTROPY_GAMES_CLI_IO_HPP_
#define ENTROPY_GAMES_CLI_IO_HPP_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "entropy_games/equilibration.hpp"
#include "entropy_games/game_core.hpp"
#include "entropy_games/info_theory.hpp"
#include "entropy_games/thermo.hpp"

namespace entropy_games::cli {

using Json = nlohmann::ordered_json;

// Parse a file; ValidationError names the path on a missing file or bad JSON.
Json read_json(const std::filesystem::path& path);

struct GameInput {
  PayoffMatrix payoff;
  std::vector<std::string> labels;  // "1".."n" when absent
};

// {n, payoff, labels?}
GameInput parse_game(const Json& doc);
// {rows, cols, probs}
JointDistribution parse_joint(const Json& doc);
// {energies, beta}
CanonicalEnsemble parse_ensemble(const Json& doc);

struct Scenario {
  std::vector<EnsembleNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  double kappa = 1.0;
  double merge_tol = 1e-3;
  double dt = 1e-3;
  double t_end = 0.0;
};
// {nodes: [{id, energies, beta}], edges: [[id, id]], kappa, merge_tol, dt, t_end}
Scenario parse_scenario(const Json& doc);

// Wrap a parser so that JSON type errors become ValidationError with the path.
template <typename F>
auto load(const std::filesystem::path& path, F&& parse) {
  const Json doc = read_json(path);
  try {
    return parse(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

// %.17g
std::string format_double(double v);
// Non-finite values become the strings "inf", "-inf", "nan".
Json json_number(double v);
Json json_vector(const std::vector<double>& v);
Json json_vector(const Vector& v);

// Write to <path>.tmp, then rename over <path>.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);
void write_json(const std::filesystem::path& path, const Json& doc);

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  void row(double t, const std::vector<double>& values);
  const std::string& str() const { return buffer_; }

 private:
  std::string buffer_;
  std::size_t columns_;
};

}  // namespace entropy_games::cli

#endif  // ENTROPY_GAMES_CLI_IO_HPP_
