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


#ifndef ENTROPY_GAMES_CLI_COMMANDS_HPP_
#define ENTROPY_GAMES_CLI_COMMANDS_HPP_

#include <cstddef>

#include "cli/cli.hpp"
#include "entropy_games/game_core.hpp"

namespace entropy_games::cli {

// Trajectory equivalence threshold for lax, residual threshold for quantum.
inline constexpr double kLaxEquivalenceTolerance = 1e-6;
inline constexpr double kCorrespondenceTolerance = 1e-6;

// Resolve --x0 / --random-x0 / uniform into a start point of dimension n.
FrequencyVector start_point(const RunConfig& config, std::size_t n);

// Dispatch on config.command; throws Error subclasses on failure.
int run_command(const RunConfig& config);

}  // namespace entropy_games::cli

#endif  // ENTROPY_GAMES_CLI_COMMANDS_HPP_
