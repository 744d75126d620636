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


#ifndef ENTROPY_GAMES_CLI_CLI_HPP_
#define ENTROPY_GAMES_CLI_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entropy_games::cli {

enum class Command { kAnalyze, kSimulate, kLax, kQuantum, kInfo, kThermo, kGlobalize };
enum class LogBase { kNatural, kTwo };

std::string_view command_name(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kAnalyze;
  std::filesystem::path input_path;
  std::filesystem::path output_dir = ".";
  // For globalize an unset dt / t_end means "take it from the scenario".
  std::optional<double> dt;
  std::optional<double> t_end;
  std::uint64_t seed = 0;
  LogBase log_base = LogBase::kNatural;

  // Starting point for simulate / lax / quantum. Empty means uniform, unless
  // random_x0 asks for a Dirichlet(1) draw from `seed`.
  std::vector<double> x0;
  bool random_x0 = false;
  double hbar = 1.0;
  int grid_resolution = 0;  // 0: per-dimension default
  double tol = 1e-9;
  int sample_every = 1;
};

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty: exit now with `exit_code`
  int exit_code = kExitOk;
};

// Usage text and CLI11 diagnostics go to `out` / `err`.
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err);
ParseOutcome parse_args(const std::vector<std::string>& args);

// 0 ok, 1 numerical invariant failure, 2 input error.
int execute(const RunConfig& config);

int run_main(int argc, char** argv);

}  // namespace entropy_games::cli

#endif  // ENTROPY_GAMES_CLI_CLI_HPP_
