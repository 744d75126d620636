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


// Error-stream logging. Verbosity comes from ENTROPY_GAMES_LOG
// (debug | info | quiet), read once; default is info.

#ifndef ENTROPY_GAMES_CLI_LOG_HPP_
#define ENTROPY_GAMES_CLI_LOG_HPP_

#include <string_view>

namespace entropy_games::cli {

enum class LogLevel { kDebug = 0, kInfo = 1, kQuiet = 2 };

LogLevel log_level();
void set_log_level(LogLevel level);

void log_debug(std::string_view message);
void log_info(std::string_view message);
// Printed at every level, quiet included.
void log_error(std::string_view message);

}  // namespace entropy_games::cli

#endif  // ENTROPY_GAMES_CLI_LOG_HPP_
