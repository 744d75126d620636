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


#include "cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cli/commands.hpp"
#include "cli/log.hpp"
#include "entropy_games/errors.hpp"

namespace entropy_games::cli {

namespace fs = std::filesystem;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kAnalyze: return "analyze";
    case Command::kSimulate: return "simulate";
    case Command::kLax: return "lax";
    case Command::kQuantum: return "quantum";
    case Command::kInfo: return "info";
    case Command::kThermo: return "thermo";
    case Command::kGlobalize: return "globalize";
  }
  return "?";
}

namespace {

std::optional<Command> command_from_name(const std::string& name) {
  for (Command c : {Command::kAnalyze, Command::kSimulate, Command::kLax,
                    Command::kQuantum, Command::kInfo, Command::kThermo,
                    Command::kGlobalize}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ValidationError("--x0: '" + item + "' is not a number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ValidationError("--x0 needs at least one value");
  return values;
}

double default_t_end(Command c) {
  switch (c) {
    case Command::kSimulate: return 50.0;
    case Command::kLax: return 10.0;
    case Command::kQuantum: return 5.0;
    default: return 0.0;
  }
}

void validate(RunConfig& cfg) {
  std::error_code ec;
  if (!fs::is_regular_file(cfg.input_path, ec)) {
    throw ValidationError("input file not found: " + cfg.input_path.string());
  }
  if (cfg.dt && !(*cfg.dt > 0.0 && std::isfinite(*cfg.dt))) {
    throw ValidationError("--dt must be positive");
  }
  if (cfg.t_end && !(*cfg.t_end >= 0.0 && std::isfinite(*cfg.t_end))) {
    throw ValidationError("--t-end must be >= 0");
  }
  if (!(cfg.hbar > 0.0 && std::isfinite(cfg.hbar))) {
    throw ValidationError("--hbar must be positive");
  }
  if (cfg.sample_every < 1) throw ValidationError("--sample-every must be >= 1");
  if (cfg.grid_resolution != 0 && cfg.grid_resolution < 2) {
    throw ValidationError("--grid-resolution must be >= 2");
  }
  if (!(cfg.tol >= 0.0)) throw ValidationError("--tol must be >= 0");
  if (cfg.random_x0 && !cfg.x0.empty()) {
    throw ValidationError("--x0 and --random-x0 are exclusive");
  }
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out,
                        std::ostream& err) {
  CLI::App app{"Replicator dynamics, density operators and ensemble thermodynamics.",
               "entropy_games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "entropy_games 0.1.0");

  RunConfig cfg;
  std::string input;
  std::string log_base;
  std::string x0_text;
  double dt = 0.0;
  double t_end = 0.0;

  const auto add_common = [&](CLI::App* sub, const std::string& input_names) {
    sub->add_option(input_names, input, "Input JSON file")->required();
    sub->add_option("-o,--output-dir", cfg.output_dir, "Directory for output files")
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed for randomised inputs")
        ->capture_default_str();
    sub->add_option("--log-base", log_base, "Entropy unit: natural (nats) or two (bits)")
        ->check(CLI::IsMember({"natural", "two"}));
  };
  const auto add_timing = [&](CLI::App* sub) {
    sub->add_option("--dt", dt, "Step size");
    sub->add_option("--t-end", t_end, "Final time");
    sub->add_option("--sample-every", cfg.sample_every, "Keep every k-th step in the output")
        ->capture_default_str();
  };
  const auto add_start = [&](CLI::App* sub) {
    sub->add_option("--x0", x0_text, "Initial frequencies, comma separated");
    sub->add_flag("--random-x0", cfg.random_x0, "Draw x0 uniformly on the simplex from --seed");
  };

  auto* analyze = app.add_subcommand("analyze", "Symmetric Nash equilibria and ESS on a grid");
  add_common(analyze, "-i,--input,--game");
  analyze->add_option("--grid-resolution", cfg.grid_resolution, "Grid points per edge (0: default)");
  analyze->add_option("--tol", cfg.tol, "Payoff tie tolerance")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Integrate the replicator equation");
  add_common(simulate, "-i,--input,--game");
  add_timing(simulate);
  add_start(simulate);

  auto* lax = app.add_subcommand("lax", "Integrate the commutator form of the flow");
  add_common(lax, "-i,--input,--game");
  add_timing(lax);
  add_start(lax);

  auto* quantum = app.add_subcommand("quantum", "Von Neumann evolution driven by the game");
  add_common(quantum, "-i,--input,--game");
  add_timing(quantum);
  add_start(quantum);
  quantum->add_option("--hbar", cfg.hbar, "Reduced Planck constant")->capture_default_str();

  auto* info = app.add_subcommand("info", "Entropies of a joint strategy distribution");
  add_common(info, "-i,--input,--joint");

  auto* thermo = app.add_subcommand("thermo", "Canonical ensemble report");
  add_common(thermo, "-i,--input,--ensemble");

  auto* globalize = app.add_subcommand("globalize", "Heat exchange on a network of ensembles");
  add_common(globalize, "-i,--input,--scenario");
  add_timing(globalize);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return ParseOutcome{std::nullopt, kExitOk};
    err << app.help();
    return ParseOutcome{std::nullopt, kExitUsage};
  }

  const auto subs = app.get_subcommands();
  cfg.command = *command_from_name(subs.front()->get_name());
  const CLI::App* sub = subs.front();
  cfg.input_path = input;

  try {
    if (sub->get_option_no_throw("--dt") && sub->count("--dt")) cfg.dt = dt;
    if (sub->get_option_no_throw("--t-end") && sub->count("--t-end")) cfg.t_end = t_end;
    if (cfg.command != Command::kGlobalize) {
      if (!cfg.dt) cfg.dt = 1e-3;
      if (!cfg.t_end) cfg.t_end = default_t_end(cfg.command);
    }
    if (log_base.empty()) {
      cfg.log_base = cfg.command == Command::kInfo ? LogBase::kTwo : LogBase::kNatural;
    } else {
      cfg.log_base = log_base == "two" ? LogBase::kTwo : LogBase::kNatural;
    }
    if (!x0_text.empty()) cfg.x0 = parse_number_list(x0_text);
    validate(cfg);
  } catch (const ValidationError& e) {
    err << "entropy_games: error: " << e.what() << '\n';
    return ParseOutcome{std::nullopt, kExitUsage};
  }
  return ParseOutcome{cfg, kExitOk};
}

ParseOutcome parse_args(const std::vector<std::string>& args) {
  return parse_args(args, std::cout, std::cerr);
}

int execute(const RunConfig& config) {
  try {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec || !fs::is_directory(config.output_dir)) {
      throw ValidationError("cannot create output directory " +
                            config.output_dir.string());
    }
    log_debug(std::string("running ") + std::string(command_name(config.command)) +
              " on " + config.input_path.string());
    return run_command(config);
  } catch (const ValidationError& e) {
    log_error(e.what());
    return kExitUsage;
  } catch (const InvariantError& e) {
    log_error(e.what());
    return kExitInvariant;
  } catch (const std::exception& e) {
    log_error(e.what());
    return kExitInvariant;
  }
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const ParseOutcome parsed = parse_args(args);
  if (!parsed.config) return parsed.exit_code;
  return execute(*parsed.config);
}

}  // namespace entropy_games::cli
