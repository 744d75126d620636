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


#include "cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "entropy_games/errors.hpp"

namespace entropy_games::cli {

namespace fs = std::filesystem;

Json read_json(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw ValidationError("input file not found: " + path.string());
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": malformed JSON: " + e.what());
  }
}

namespace {

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ValidationError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw ValidationError(std::string("missing field '") + name + "'");
  }
  return *it;
}

Matrix matrix_field(const Json& rows, const char* name) {
  if (!rows.is_array() || rows.empty()) {
    throw ValidationError(std::string("'") + name + "' must be a non-empty array of rows");
  }
  const auto r = rows.size();
  const auto c = rows.front().size();
  Matrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != c) {
      throw ValidationError(std::string("'") + name + "' is ragged at row " +
                            std::to_string(i));
    }
    for (std::size_t j = 0; j < c; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          row[j].get<double>();
    }
  }
  return m;
}

std::vector<double> number_list(const Json& v, const char* name) {
  if (!v.is_array() || v.empty()) {
    throw ValidationError(std::string("'") + name + "' must be a non-empty array");
  }
  return v.get<std::vector<double>>();
}

std::size_t count_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(std::string("'") + name + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

GameInput parse_game(const Json& doc) {
  const std::size_t n = count_field(doc, "n");
  Matrix a = matrix_field(field(doc, "payoff"), "payoff");
  if (static_cast<std::size_t>(a.rows()) != n ||
      static_cast<std::size_t>(a.cols()) != n) {
    throw DimensionError("payoff must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = doc["labels"].get<std::vector<std::string>>();
    if (labels.size() != n) {
      throw DimensionError("labels must have n = " + std::to_string(n) + " entries");
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  }
  return GameInput{PayoffMatrix(std::move(a)), std::move(labels)};
}

JointDistribution parse_joint(const Json& doc) {
  const std::size_t rows = count_field(doc, "rows");
  const std::size_t cols = count_field(doc, "cols");
  Matrix p = matrix_field(field(doc, "probs"), "probs");
  if (static_cast<std::size_t>(p.rows()) != rows ||
      static_cast<std::size_t>(p.cols()) != cols) {
    throw DimensionError("probs must be " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  return JointDistribution(std::move(p));
}

CanonicalEnsemble parse_ensemble(const Json& doc) {
  CanonicalEnsemble e;
  e.energies = number_list(field(doc, "energies"), "energies");
  e.beta = field(doc, "beta").get<double>();
  for (double v : e.energies) {
    if (!std::isfinite(v)) throw ValidationError("energies must be finite");
  }
  if (!std::isfinite(e.beta)) throw ValidationError("beta must be finite");
  return e;
}

Scenario parse_scenario(const Json& doc) {
  Scenario s;
  const Json& nodes = field(doc, "nodes");
  if (!nodes.is_array() || nodes.empty()) {
    throw ValidationError("'nodes' must be a non-empty array");
  }
  for (const Json& node : nodes) {
    s.nodes.push_back(make_node(field(node, "id").get<std::string>(),
                                number_list(field(node, "energies"), "energies"),
                                field(node, "beta").get<double>()));
  }
  for (const Json& edge : field(doc, "edges")) {
    if (!edge.is_array() || edge.size() != 2) {
      throw ValidationError("each edge must be a pair of node ids");
    }
    s.edges.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
  }
  s.kappa = field(doc, "kappa").get<double>();
  s.merge_tol = field(doc, "merge_tol").get<double>();
  s.dt = field(doc, "dt").get<double>();
  s.t_end = field(doc, "t_end").get<double>();
  return s;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json json_vector(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(json_number(x));
  return out;
}

Json json_vector(const Vector& v) {
  return json_vector(std::vector<double>(v.begin(), v.end()));
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw ValidationError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ValidationError("cannot rename into " + path.string());
  }
}

void write_json(const fs::path& path, const Json& doc) {
  write_file_atomic(path, doc.dump(2) + "\n");
}

CsvWriter::CsvWriter(const std::vector<std::string>& header)
    : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

void CsvWriter::row(double t, const std::vector<double>& values) {
  if (values.size() + 1 != columns_) {
    throw InvariantError("csv row has " + std::to_string(values.size() + 1) +
                         " columns, header has " + std::to_string(columns_));
  }
  buffer_ += format_double(t);
  for (double v : values) {
    buffer_ += ',';
    buffer_ += format_double(v);
  }
  buffer_ += '\n';
}

}  // namespace entropy_games::cli
