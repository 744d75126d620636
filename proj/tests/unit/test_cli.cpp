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


#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cli/log.hpp"

namespace fs = std::filesystem;
using namespace entropy_games;
using namespace entropy_games::cli;

namespace {

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("ENTROPY_GAMES_TEST_TMP");
  const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "entropy_games_cli";
  const fs::path dir = root / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path put(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Parsed {
  ParseOutcome outcome;
  std::string out;
  std::string err;
};

Parsed parse(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Parsed p{parse_args(args, out, err), "", ""};
  p.out = out.str();
  p.err = err.str();
  return p;
}

// Full pipeline as the binary runs it.
int run(const std::vector<std::string>& args) {
  const Parsed p = parse(args);
  if (!p.outcome.config) return p.outcome.exit_code;
  return execute(*p.outcome.config);
}

const char* kPrisoners = R"({"n": 2, "payoff": [[3, 0], [5, 1]], "labels": ["C", "D"]})";
const char* kHawkDove = R"({"n": 2, "payoff": [[-1, 2], [0, 1]]})";
const char* kJoint = R"({"rows": 2, "cols": 2, "probs": [[0.1, 0.2], [0.3, 0.4]]})";
const char* kEnsemble = R"({"energies": [0, 1], "beta": 1})";

std::string ring_scenario() {
  std::string s = R"({"nodes": [)";
  const double beta[] = {0.4, 1.0, 1.7, 0.9};
  for (int i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += R"({"id": "n)" + std::to_string(i) + R"(", "energies": [0, 1], "beta": )" +
         format_double(beta[i]) + "}";
  }
  s += R"(], "edges": [["n0","n1"],["n1","n2"],["n2","n3"],["n3","n0"]],)";
  s += R"( "kappa": 1, "merge_tol": 1e-3, "dt": 1e-3, "t_end": 2})";
  return s;
}

}  // namespace

TEST_CASE("parse_args fills defaults") {
  const fs::path dir = scratch("parse_defaults");
  const fs::path game = put(dir, "pd.json", kPrisoners);
  const Parsed p = parse({"analyze", "--game", game.string()});
  REQUIRE(p.outcome.config.has_value());
  const RunConfig& c = *p.outcome.config;
  CHECK(c.command == Command::kAnalyze);
  CHECK(c.input_path == game);
  CHECK(c.output_dir == fs::path("."));
  CHECK(c.dt == 1e-3);
  CHECK(c.seed == 0);
  CHECK(c.log_base == LogBase::kNatural);
  CHECK(c.tol == 1e-9);
  CHECK(c.grid_resolution == 0);

  const Parsed sim = parse({"simulate", "--input", game.string()});
  REQUIRE(sim.outcome.config.has_value());
  CHECK(sim.outcome.config->t_end == 50.0);

  const Parsed info = parse({"info", "--joint", game.string()});
  REQUIRE(info.outcome.config.has_value());
  CHECK(info.outcome.config->log_base == LogBase::kTwo);

  const Parsed glob = parse({"globalize", "--scenario", game.string()});
  REQUIRE(glob.outcome.config.has_value());
  CHECK_FALSE(glob.outcome.config->dt.has_value());
  CHECK_FALSE(glob.outcome.config->t_end.has_value());
}

TEST_CASE("parse_args reads every flag") {
  const fs::path dir = scratch("parse_flags");
  const fs::path game = put(dir, "hd.json", kHawkDove);
  const Parsed p = parse({"quantum", "-i", game.string(), "-o", "out", "--dt", "0.01",
                          "--t-end", "2.5", "--seed", "99", "--log-base", "two",
                          "--x0", "0.9, 0.1", "--hbar", "0.5", "--sample-every", "10"});
  REQUIRE(p.outcome.config.has_value());
  const RunConfig& c = *p.outcome.config;
  CHECK(c.command == Command::kQuantum);
  CHECK(c.output_dir == fs::path("out"));
  CHECK(c.dt == 0.01);
  CHECK(c.t_end == 2.5);
  CHECK(c.seed == 99);
  CHECK(c.log_base == LogBase::kTwo);
  CHECK(c.x0 == std::vector<double>{0.9, 0.1});
  CHECK(c.hbar == 0.5);
  CHECK(c.sample_every == 10);
}

TEST_CASE("help and usage errors") {
  const Parsed help = parse({"--help"});
  CHECK_FALSE(help.outcome.config.has_value());
  CHECK(help.outcome.exit_code == 0);
  CHECK(help.out.find("simulate") != std::string::npos);

  const Parsed sub_help = parse({"thermo", "--help"});
  CHECK(sub_help.outcome.exit_code == 0);
  CHECK(sub_help.out.find("--ensemble") != std::string::npos);

  const Parsed unknown = parse({"frobnicate"});
  CHECK(unknown.outcome.exit_code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);

  CHECK(parse({}).outcome.exit_code == 2);

  const Parsed missing = parse({"simulate", "--game", "missing.json"});
  CHECK_FALSE(missing.outcome.config.has_value());
  CHECK(missing.outcome.exit_code == 2);
  CHECK(missing.err.find("missing.json") != std::string::npos);

  const fs::path dir = scratch("usage");
  const fs::path game = put(dir, "pd.json", kPrisoners);
  const std::string g = game.string();
  CHECK(parse({"simulate", "--game", g, "--dt", "0"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--dt", "-1"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--t-end", "-1"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--log-base", "ten"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--x0", "0.5,x"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--x0", "1,0", "--random-x0"}).outcome.exit_code == 2);
  CHECK(parse({"simulate", "--game", g, "--sample-every", "0"}).outcome.exit_code == 2);
  CHECK(parse({"analyze", "--game", g, "--grid-resolution", "1"}).outcome.exit_code == 2);
  CHECK(parse({"analyze", "--game", g, "--bogus"}).outcome.exit_code == 2);
  CHECK(parse({"analyze"}).outcome.exit_code == 2);
  CHECK(parse({"thermo", "--game", g}).outcome.exit_code == 2);  // wrong alias
}

TEST_CASE("start point resolution") {
  RunConfig c;
  CHECK(start_point(c, 3).values().isApprox(FrequencyVector::uniform(3).values()));
  c.x0 = {0.9, 0.1};
  CHECK(start_point(c, 2)[0] == 0.9);
  CHECK_THROWS_AS(start_point(c, 3), DimensionError);
  c.x0 = {0.9, 0.2};
  CHECK_THROWS_AS(start_point(c, 2), ValidationError);
  c.x0.clear();
  c.random_x0 = true;
  c.seed = 5;
  const FrequencyVector a = start_point(c, 4);
  const FrequencyVector b = start_point(c, 4);
  CHECK(a.values() == b.values());
  CHECK(a.simplex_drift() < 1e-15);
  c.seed = 6;
  CHECK(start_point(c, 4).values() != a.values());
}

TEST_CASE("analyze reports the dominant strategy as ESS") {
  const fs::path dir = scratch("analyze");
  const fs::path game = put(dir, "pd.json", kPrisoners);
  REQUIRE(run({"analyze", "--game", game.string(), "-o", dir.string()}) == 0);
  const Json doc = read_json(dir / "equilibria.json");
  CHECK(doc["labels"] == Json::array({"C", "D"}));
  CHECK(doc["grid_resolution"] == 100);
  REQUIRE(doc["equilibria"].size() == 1);
  const Json& e = doc["equilibria"][0];
  CHECK(e["strategy"][1].get<double>() > 0.99);
  CHECK(e["nash"] == true);
  CHECK(e["ess"] == true);
}

TEST_CASE("simulate writes the trajectory") {
  const fs::path dir = scratch("simulate");
  const fs::path game = put(dir, "hd.json", kHawkDove);
  REQUIRE(run({"simulate", "--game", game.string(), "-o", dir.string(), "--x0", "0.9,0.1",
               "--sample-every", "1000"}) == 0);
  std::ifstream in(dir / "trajectory.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x_1,x_2,H");
  std::string last;
  int rows = 0;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 51);
  std::vector<double> v;
  std::stringstream ss(last);
  for (std::string cell; std::getline(ss, cell, ',');) v.push_back(std::stod(cell));
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 50.0);
  CHECK(std::abs(v[1] - 0.5) < 1e-6);
  CHECK(v[3] == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK_FALSE(fs::exists(dir / "trajectory.csv.tmp"));
}

TEST_CASE("lax reports diagonal equivalence") {
  const fs::path dir = scratch("lax");
  const fs::path game = put(dir, "hd.json", kHawkDove);
  REQUIRE(run({"lax", "--game", game.string(), "-o", dir.string(), "--x0", "0.9,0.1",
               "--t-end", "5", "--sample-every", "100"}) == 0);
  const Json doc = read_json(dir / "lax_report.json");
  CHECK(doc["diagonal_equivalence"] == true);
  CHECK(doc["max_diagonal_deviation"].get<double>() < 1e-6);
  CHECK(doc["max_spectrum_deviation"].get<double>() < 1e-6);
  CHECK(doc["max_commutator_residual"].get<double>() < 1e-12);
  CHECK(std::abs(doc["final_entropy_eigen"].get<double>()) < 1e-6);
  CHECK(fs::exists(dir / "matrix_trajectory.csv"));
  CHECK(fs::exists(dir / "matrix_eigenvalues.csv"));
  std::ifstream in(dir / "matrix_trajectory.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,x_11,x_12,x_21,x_22");
}

TEST_CASE("quantum correspondence on Hawk-Dove") {
  const fs::path dir = scratch("quantum");
  const fs::path game = put(dir, "hd.json", kHawkDove);
  REQUIRE(run({"quantum", "--game", game.string(), "-o", dir.string(), "--x0", "0.9,0.1",
               "--t-end", "5", "--sample-every", "50"}) == 0);
  const Json doc = read_json(dir / "quantum_report.json");
  CHECK(doc["max_residual"].get<double>() < 1e-6);
  CHECK(doc["correspondence"] == true);
  CHECK(doc["final_purity"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  // A pure state has zero eigenvalues, so the exact branch is unavailable
  // whenever rho' has weight there.
  CHECK(doc["entropy_rate_initial"].contains("truncated"));
  std::ifstream in(dir / "density_trajectory.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,re_11,im_11,re_12,im_12,re_21,im_21,re_22,im_22");
}

TEST_CASE("info report in bits and nats") {
  const fs::path dir = scratch("info");
  const fs::path joint = put(dir, "joint.json", kJoint);
  REQUIRE(run({"info", "--joint", joint.string(), "-o", dir.string()}) == 0);
  const Json bits = read_json(dir / "info_report.json");
  CHECK(bits["unit"] == "bits");
  CHECK(bits["mutual_information"].get<double>() ==
        doctest::Approx(0.0058021490143458365).epsilon(1e-10));
  REQUIRE(run({"info", "--joint", joint.string(), "-o", dir.string(), "--log-base",
               "natural"}) == 0);
  const Json nats = read_json(dir / "info_report.json");
  CHECK(nats["h_a"].get<double>() ==
        doctest::Approx(bits["h_a"].get<double>() * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("thermo report") {
  const fs::path dir = scratch("thermo");
  const fs::path ens = put(dir, "ens.json", kEnsemble);
  REQUIRE(run({"thermo", "--ensemble", ens.string(), "-o", dir.string()}) == 0);
  const Json doc = read_json(dir / "ensemble_report.json");
  CHECK(doc["z"].get<double>() == doctest::Approx(1.3678794411714423).epsilon(1e-14));
  CHECK(doc["entropy"].get<double>() == doctest::Approx(0.582203108888218).epsilon(1e-12));
  CHECK(doc["mean_energy"].get<double>() ==
        doctest::Approx(0.2689414213699951).epsilon(1e-14));
  CHECK(doc["temperature"].get<double>() == 1.0);

  const fs::path hot = put(dir, "hot.json", R"({"energies": [0, 1], "beta": 0})");
  REQUIRE(run({"thermo", "--ensemble", hot.string(), "-o", dir.string()}) == 0);
  const Json h = read_json(dir / "ensemble_report.json");
  CHECK(h["temperature"] == "inf");
  CHECK(h["probs"] == Json::array({0.5, 0.5}));
}

TEST_CASE("globalize writes the history") {
  const fs::path dir = scratch("globalize");
  const fs::path sc = put(dir, "ring.json", ring_scenario());
  REQUIRE(run({"globalize", "--scenario", sc.string(), "-o", dir.string(),
               "--sample-every", "100"}) == 0);
  std::ifstream in(dir / "history.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,block_count,total_energy,tau_n0,tau_n1,tau_n2,tau_n3");
}

TEST_CASE("exit status contract") {
  set_log_level(LogLevel::kQuiet);
  const fs::path dir = scratch("exit");
  const std::string out = dir.string();
  const auto file = [&](const std::string& name, const std::string& text) {
    return put(dir, name, text).string();
  };

  // Numerical invariant failures.
  const std::string wild = file("wild.json", R"({"n": 2, "payoff": [[50, -80], [-90, 40]]})");
  CHECK(run({"simulate", "--game", wild, "-o", out, "--dt", "1", "--t-end", "20",
             "--x0", "0.3,0.7"}) == 1);
  CHECK(run({"lax", "--game", wild, "-o", out, "--dt", "1", "--t-end", "20",
             "--x0", "0.3,0.7"}) == 1);
  CHECK(run({"quantum", "--game", wild, "-o", out, "--dt", "1", "--t-end", "20",
             "--x0", "0.3,0.7"}) == 1);

  // Malformed inputs.
  const std::string broken = file("broken.json", "{\"n\": 2, \"payoff\": [[1, 2], ");
  const std::string ragged = file("ragged.json", R"({"n": 2, "payoff": [[1, 2], [3]]})");
  const std::string wrong_n = file("wrong_n.json", R"({"n": 3, "payoff": [[1, 2], [3, 4]]})");
  const std::string words = file("words.json", R"({"n": 2, "payoff": [["a", 2], [3, 4]]})");
  const std::string game = file("game.json", kPrisoners);
  CHECK(run({"analyze", "--game", broken, "-o", out}) == 2);
  CHECK(run({"analyze", "--game", ragged, "-o", out}) == 2);
  CHECK(run({"simulate", "--game", wrong_n, "-o", out}) == 2);
  CHECK(run({"simulate", "--game", words, "-o", out}) == 2);
  CHECK(run({"simulate", "--game", game, "-o", out, "--x0", "0.2,0.3,0.5"}) == 2);
  CHECK(run({"simulate", "--game", game, "-o", out, "--x0", "0.9,0.3"}) == 2);

  const std::string bad_joint =
      file("bad_joint.json", R"({"rows": 2, "cols": 2, "probs": [[0.5, 0.5], [0.5, 0.5]]})");
  CHECK(run({"info", "--joint", bad_joint, "-o", out}) == 2);
  const std::string flat_ens = file("flat.json", R"({"energies": [], "beta": 1})");
  CHECK(run({"thermo", "--ensemble", flat_ens, "-o", out}) == 2);
  const std::string no_beta = file("no_beta.json", R"({"energies": [0, 1]})");
  CHECK(run({"thermo", "--ensemble", no_beta, "-o", out}) == 2);

  std::string loop = ring_scenario();
  loop.replace(loop.find(R"(["n3","n0"])"), 11, R"(["n3","n3"])");
  CHECK(run({"globalize", "--scenario", file("loop.json", loop), "-o", out}) == 2);
  CHECK(run({"globalize", "--scenario", file("ring.json", ring_scenario()), "-o", out,
             "--dt", "0.3"}) == 2);  // dt kappa deg >= 1/2
  CHECK(run({"globalize", "--scenario", game, "-o", out}) == 2);

  // Valid inputs.
  CHECK(run({"analyze", "--game", game, "-o", out}) == 0);
  CHECK(run({"thermo", "--ensemble", file("ens.json", kEnsemble), "-o", out}) == 0);

  // Output directory that is a file.
  CHECK(run({"thermo", "--ensemble", file("ens2.json", kEnsemble), "-o", game}) == 2);
  set_log_level(LogLevel::kInfo);
}

TEST_CASE("identical runs give byte-identical files") {
  set_log_level(LogLevel::kQuiet);
  const fs::path dir = scratch("determinism");
  const std::string game = put(dir, "hd.json", kHawkDove).string();
  const std::string joint = put(dir, "joint.json", kJoint).string();
  const std::string ens = put(dir, "ens.json", kEnsemble).string();
  const std::string sc = put(dir, "ring.json", ring_scenario()).string();
  const std::vector<std::vector<std::string>> runs = {
      {"analyze", "--game", game},
      {"simulate", "--game", game, "--random-x0", "--seed", "7", "--t-end", "5"},
      {"lax", "--game", game, "--random-x0", "--seed", "7", "--t-end", "2"},
      {"quantum", "--game", game, "--random-x0", "--seed", "7", "--t-end", "2"},
      {"info", "--joint", joint},
      {"thermo", "--ensemble", ens},
      {"globalize", "--scenario", sc},
  };
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path d = dir / ("run" + std::to_string(r) + "_" + std::to_string(rep));
      fs::create_directories(d);
      auto args = runs[r];
      args.push_back("-o");
      args.push_back(d.string());
      REQUIRE(run(args) == 0);
      dirs.push_back(d);
    }
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      const fs::path twin = dirs[1] / entry.path().filename();
      REQUIRE(fs::exists(twin));
      CHECK(slurp(entry.path()) == slurp(twin));
      ++files;
    }
    CHECK(files > 0);
  }
  set_log_level(LogLevel::kInfo);
}
