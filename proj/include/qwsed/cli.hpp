// Copyright 2026 The qwsed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWSED_CLI_HPP_
#define QWSED_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwsed/family.hpp"
#include "qwsed/graph.hpp"
#include "qwsed/matrices.hpp"
#include "qwsed/report.hpp"

namespace qwsed::cli {

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string family;
  std::string matrix = "adjacency";
  std::string vertex = "0";
  std::optional<std::string> target;  // second vertex for sweep / mixing-check
  std::optional<double> window;
  std::optional<std::size_t> grid;
  std::optional<double> cluster_tol;
  std::optional<double> time;  // mixing-check
  bool spectral = false;
  bool exhaustive = false;
  std::string out;
  std::optional<Format> format;
};

struct LoadedGraph {
  WeightedGraph graph;
  std::optional<FamilySpec> family;
  std::string name;
};

// Arithmetic in +, -, *, /, parentheses, pi and sqrt(), e.g. "2*pi/9".
double parse_time(std::string_view text);

LoadedGraph load_graph(const RunConfig& cfg);

// Accepts an id, a vertex label, a role keyword such as "apex" or "leaf",
// or "all".
std::vector<VertexId> select_vertices(const LoadedGraph& g, std::string_view selector);

Json cmd_analyze(const RunConfig& cfg);
std::string cmd_sweep(const RunConfig& cfg);
Json cmd_family_scan(const RunConfig& cfg);
Json cmd_oracle(const RunConfig& cfg);
Json cmd_mixing_check(const RunConfig& cfg);

// Exit codes: 0 on success for any classification, 1 on runtime errors,
// 2 on invalid input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwsed::cli

#endif  // QWSED_CLI_HPP_
