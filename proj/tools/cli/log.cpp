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


#include "cli/log.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace entropy_games::cli {

namespace {

LogLevel level_from_env() {
  const char* raw = std::getenv("ENTROPY_GAMES_LOG");
  if (raw == nullptr) return LogLevel::kInfo;
  const std::string v(raw);
  if (v == "debug") return LogLevel::kDebug;
  if (v == "quiet") return LogLevel::kQuiet;
  return LogLevel::kInfo;
}

std::optional<LogLevel>& override_level() {
  static std::optional<LogLevel> level;
  return level;
}

void emit(std::string_view tag, std::string_view message) {
  std::cerr << "entropy_games: " << tag << message << '\n';
}

}  // namespace

LogLevel log_level() {
  if (override_level()) return *override_level();
  static const LogLevel from_env = level_from_env();
  return from_env;
}

void set_log_level(LogLevel level) { override_level() = level; }

void log_debug(std::string_view message) {
  if (log_level() <= LogLevel::kDebug) emit("debug: ", message);
}

void log_info(std::string_view message) {
  if (log_level() <= LogLevel::kInfo) emit("", message);
}

void log_error(std::string_view message) { emit("error: ", message); }

}  // namespace entropy_games::cli
