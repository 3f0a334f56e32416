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

#include "qwsed/cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwsed/error.hpp"
#include "qwsed/parallel.hpp"
#include "qwsed/sedentary.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/walk.hpp"

namespace qwsed::cli {

namespace {

class TimeParser {
 public:
  explicit TimeParser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("bad time expression '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  double term() {
    double v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }
  double factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (eat_word("pi")) return std::numbers::pi;
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("sqrt needs '('");
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return std::sqrt(v);
    }
    skip();
    const std::string rest(s_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos_ += used;
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ClassifyOptions classify_options(const RunConfig& cfg, const LoadedGraph& g) {
  ClassifyOptions o;
  if (cfg.cluster_tol) o.spectral.cluster_tol = *cfg.cluster_tol;
  if (cfg.grid) o.minimize.grid = *cfg.grid;
  o.minimize.window = cfg.window;
  o.family = g.family;
  o.graph_name = g.name;
  o.exhaustive_subsets = cfg.exhaustive;
  return o;
}

SpectralDecomposition decompose_for(const RunConfig& cfg, const LoadedGraph& g) {
  SpectralOptions so;
  if (cfg.cluster_tol) so.cluster_tol = *cfg.cluster_tol;
  return decompose(assemble(g.graph, MatrixKind::parse(cfg.matrix)), so);
}

VertexId single_vertex(const LoadedGraph& g, std::string_view selector) {
  const auto vs = select_vertices(g, selector);
  if (vs.size() != 1) throw InvalidInput("selector '" + std::string(selector) + "' must name one vertex");
  return vs.front();
}

Json header(const LoadedGraph& g, const RunConfig& cfg, VertexId u) {
  Json j;
  j["graph"] = g.name;
  j["matrix"] = MatrixKind::parse(cfg.matrix).to_string();
  j["vertex"] = u;
  return j;
}

std::string monotonicity(const std::vector<double>& c) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1] - 1e-12) up = false;
    if (c[i] > c[i - 1] + 1e-12) down = false;
  }
  if (up && down) return "constant";
  if (up) return "nondecreasing";
  if (down) return "nonincreasing";
  return "mixed";
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw Error("failed writing '" + cfg.out + "'");
}

std::string analyze_csv(const Json& j) {
  std::ostringstream out;
  out << "graph,matrix,vertex,classification,C,m*,t*,certified\n";
  auto row = [&out](const Json& r) {
    out << r["graph"].get<std::string>() << ',' << r["matrix"].get<std::string>() << ','
        << r["vertex"].get<std::size_t>() << ',' << r["classification"].get<std::string>() << ','
        << format_double(r["C"].get<double>()) << ','
        << format_double(r["oracle"]["m*"].get<double>()) << ','
        << format_double(r["oracle"]["t*"].get<double>()) << ','
        << (r["oracle"]["certified"].get<bool>() ? "true" : "false") << '\n';
  };
  const Json& reports = j.contains("reports") ? j["reports"] : j;
  if (reports.is_array()) {
    for (const auto& r : reports) row(r);
  } else {
    row(reports);
  }
  return out.str();
}

}  // namespace

double parse_time(std::string_view text) {
  const double v = TimeParser(text).parse();
  if (!std::isfinite(v)) throw InvalidInput("time expression '" + std::string(text) + "' is not finite");
  return v;
}

LoadedGraph load_graph(const RunConfig& cfg) {
  const bool has_graph = !cfg.graph_path.empty();
  const bool has_family = !cfg.family.empty();
  if (has_graph == has_family) throw InvalidInput("give exactly one of --graph and --family");
  LoadedGraph g;
  if (has_graph) {
    g.graph = read_graph_file(cfg.graph_path);
    g.name = std::filesystem::path(cfg.graph_path).filename().string();
  } else {
    g.family = parse_family(cfg.family);
    g.graph = build_family(*g.family);
    g.name = g.family->to_string();
  }
  return g;
}

std::vector<VertexId> select_vertices(const LoadedGraph& g, std::string_view selector) {
  const std::size_t n = g.graph.order();
  if (selector == "all") {
    std::vector<VertexId> all(n);
    for (VertexId u = 0; u < n; ++u) all[u] = u;
    return all;
  }
  if (!selector.empty() &&
      std::all_of(selector.begin(), selector.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto u = static_cast<VertexId>(std::stoull(std::string(selector)));
    if (u >= n) {
      throw InvalidInput("vertex " + std::string(selector) + " out of range for order " +
                         std::to_string(n));
    }
    return {u};
  }
  if (const auto u = g.graph.find_label(selector)) return {*u};
  if (const auto role = parse_role(selector)) {
    if (!g.family) throw InvalidInput("role selector '" + std::string(selector) + "' needs --family");
    if (const auto u = first_vertex_with_role(*g.family, *role)) return {*u};
    throw InvalidInput("no vertex with role '" + std::string(selector) + "' in " + g.name);
  }
  throw InvalidInput("bad vertex selector '" + std::string(selector) + "'");
}

Json cmd_analyze(const RunConfig& cfg) {
  const LoadedGraph g = load_graph(cfg);
  const auto vertices = select_vertices(g, cfg.vertex);
  const SpectralDecomposition d = decompose_for(cfg, g);
  const ClassifyOptions opts = classify_options(cfg, g);
  std::vector<Json> reports(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    reports[i] = to_json(classify(g.graph, d, vertices[i], opts));
  }
  const bool single = cfg.vertex != "all";
  if (!cfg.spectral) return single ? reports.front() : Json(reports);
  Json out;
  if (single) {
    out = reports.front();
  } else {
    out["reports"] = reports;
  }
  out["spectral"] = spectral_json(g.graph, d);
  return out;
}

std::string cmd_sweep(const RunConfig& cfg) {
  const LoadedGraph g = load_graph(cfg);
  const VertexId u = single_vertex(g, cfg.vertex);
  const VertexId v = cfg.target ? single_vertex(g, *cfg.target) : u;
  const SpectralDecomposition d = decompose_for(cfg, g);
  const WalkEvaluator w(d);
  double window = 2.0 * std::numbers::pi;
  if (cfg.window) {
    window = *cfg.window;
  } else if (const auto p = periodicity(d, u); p.periodic) {
    window = p.period;
  }
  if (!(window > 0.0)) throw InvalidInput("window must be positive");
  const std::size_t n = cfg.grid.value_or(4096);
  if (n == 0) throw InvalidInput("grid must be positive");
  std::vector<double> ts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = window * static_cast<double>(i) / static_cast<double>(n);
  }
  const std::vector<Complex> values = entry_series(w, u, v, ts);
  std::ostringstream out;
  if (cfg.format.value_or(Format::Csv) == Format::Csv) {
    out << "t,re,im,abs\n";
    for (std::size_t i = 0; i <= n; ++i) {
      out << format_double(ts[i]) << ',' << format_double(values[i].real()) << ','
          << format_double(values[i].imag()) << ',' << format_double(std::abs(values[i]))
          << '\n';
    }
    return out.str();
  }
  Json j = header(g, cfg, u);
  j["target"] = v;
  Json rows = Json::array();
  for (std::size_t i = 0; i <= n; ++i) {
    rows.push_back({ts[i], values[i].real(), values[i].imag(), std::abs(values[i])});
  }
  j["columns"] = {"t", "re", "im", "abs"};
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

Json cmd_family_scan(const RunConfig& cfg) {
  if (cfg.family.empty()) throw InvalidInput("family-scan needs a family spec");
  if (!cfg.graph_path.empty()) throw InvalidInput("family-scan does not take --graph");
  if (cfg.vertex == "all") throw InvalidInput("family-scan needs a single-vertex selector");
  const auto members = expand_scan(cfg.family);
  std::vector<Json> out(members.size());
  std::vector<double> cs(members.size());
  std::vector<std::size_t> orders(members.size());
  parallel_for(
      members.size(),
      [&](std::size_t i) {
        RunConfig mc = cfg;
        mc.family = members[i].spec;
        const LoadedGraph g = load_graph(mc);
        const VertexId u = single_vertex(g, cfg.vertex);
        const SpectralDecomposition d = decompose_for(mc, g);
        const SedentaryReport r = classify(g.graph, d, u, classify_options(mc, g));
        Json m;
        m["value"] = members[i].value;
        m["family"] = g.name;
        m["order"] = g.graph.order();
        m["report"] = to_json(r);
        out[i] = std::move(m);
        cs[i] = r.C;
        orders[i] = g.graph.order();
      },
      1);
  Json table = Json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    table.push_back({{"value", members[i].value},
                     {"order", orders[i]},
                     {"C", cs[i]},
                     {"classification", out[i]["report"]["classification"]}});
  }
  Json j;
  j["members"] = out;
  j["trend"] = {{"table", table}, {"monotonicity", monotonicity(cs)}};
  return j;
}

Json cmd_oracle(const RunConfig& cfg) {
  const LoadedGraph g = load_graph(cfg);
  const VertexId u = single_vertex(g, cfg.vertex);
  const SpectralDecomposition d = decompose_for(cfg, g);
  const WalkEvaluator w(d);
  const PeriodicityInfo p = periodicity(d, u);
  MinimizeOptions mo;
  if (cfg.grid) mo.grid = *cfg.grid;
  mo.window = cfg.window;
  if (!mo.window && !p.periodic) mo.window = ClassifyOptions{}.uncertified_window;
  Json j = header(g, cfg, u);
  j["periodicity"] = to_json(p);
  j["oracle"] = to_json(minimize_diagonal(w, u, mo));
  return j;
}

Json cmd_mixing_check(const RunConfig& cfg) {
  if (!cfg.time) throw InvalidInput("mixing-check needs --time");
  const LoadedGraph g = load_graph(cfg);
  const VertexId u = single_vertex(g, cfg.vertex);
  const SpectralDecomposition d = decompose_for(cfg, g);
  const WalkEvaluator w(d);
  Json j = header(g, cfg, u);
  j["time"] = *cfg.time;
  j["diagonal_magnitude"] = std::abs(w.entry(*cfg.time, u, u));
  j["uniform_mixing_vertex"] = check_uniform_mixing(w, u, *cfg.time);
  j["uniform_mixing_all"] = check_uniform_mixing_all(w, *cfg.time);
  if (cfg.target) {
    const VertexId v = single_vertex(g, *cfg.target);
    const FractionalRevival fr = check_fractional_revival(w, u, v, *cfg.time);
    j["fractional_revival"] = {
        {"target", v}, {"alpha", fr.alpha}, {"beta", fr.beta}, {"proper", fr.proper}};
  }
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string window_text;
  std::string time_text;
  std::string format_text;
  std::string scan_spec;

  CLI::App app{"Continuous-time quantum walks and vertex sedentariness", "qwsed"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool family_positional) {
    if (family_positional) {
      sub->add_option("spec", scan_spec, "Family spec with one a..b range");
    } else {
      sub->add_option("--graph", cfg.graph_path, "Graph file (first line 'n m', then 'u v w')");
    }
    sub->add_option("--family", cfg.family, "Family spec, e.g. rook:3,4 or cone:@x.graph");
    sub->add_option("--matrix", cfg.matrix,
                    "adjacency|laplacian|gen:<alpha>|norm-adj|norm-lap")
        ->capture_default_str();
    sub->add_option("--vertex", cfg.vertex, "Vertex id, label, role keyword, or all")
        ->capture_default_str();
    sub->add_option("--window", window_text, "Time window T, e.g. 2*pi");
    sub->add_option("--grid", cfg.grid, "Grid size");
    sub->add_option("--cluster-tol", cfg.cluster_tol, "Relative eigenvalue clustering tolerance");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_option("--format", format_text, "json|csv");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Classify a vertex");
  add_common(analyze, false);
  analyze->add_flag("--spectral", cfg.spectral, "Include the spectral decomposition");
  analyze->add_flag("--exhaustive", cfg.exhaustive, "Try every eigenvalue subset (small supports)");

  CLI::App* sweep = app.add_subcommand("sweep", "Time series of one walk entry");
  add_common(sweep, false);
  sweep->add_option("--target", cfg.target, "Second vertex (default: the vertex itself)");

  CLI::App* scan = app.add_subcommand("family-scan", "Classify every member of a family range");
  add_common(scan, true);
  scan->add_flag("--exhaustive", cfg.exhaustive, "Try every eigenvalue subset (small supports)");

  CLI::App* oracle = app.add_subcommand("oracle", "Global minimum of the diagonal entry");
  add_common(oracle, false);

  CLI::App* mixing = app.add_subcommand("mixing-check", "Uniform mixing and fractional revival");
  add_common(mixing, false);
  mixing->add_option("--time", time_text, "Time, e.g. pi/(3*sqrt(3))")->required();
  mixing->add_option("--target", cfg.target, "Partner vertex for fractional revival");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!scan_spec.empty()) {
      if (!cfg.family.empty()) throw InvalidInput("give the family spec once");
      cfg.family = scan_spec;
    }
    if (!window_text.empty()) cfg.window = parse_time(window_text);
    if (!time_text.empty()) cfg.time = parse_time(time_text);
    if (!format_text.empty()) {
      if (format_text == "json") {
        cfg.format = Format::Json;
      } else if (format_text == "csv") {
        cfg.format = Format::Csv;
      } else {
        throw InvalidInput("--format must be json or csv");
      }
    }
    if (cfg.window && !(*cfg.window > 0.0)) throw InvalidInput("--window must be positive");

    auto json_or_csv = [&](const Json& j) {
      if (cfg.format == Format::Csv) {
        if (analyze->parsed() || scan->parsed()) {
          emit(cfg, out, analyze_csv(scan->parsed() ? [&] {
            Json reports = Json::array();
            for (const auto& m : j["members"]) reports.push_back(m["report"]);
            return reports;
          }() : j));
          return;
        }
        throw InvalidInput("this command has no CSV form");
      }
      emit(cfg, out, j.dump(2) + "\n");
    };

    if (analyze->parsed()) {
      cfg.command = "analyze";
      json_or_csv(cmd_analyze(cfg));
    } else if (sweep->parsed()) {
      cfg.command = "sweep";
      emit(cfg, out, cmd_sweep(cfg));
    } else if (scan->parsed()) {
      cfg.command = "family-scan";
      json_or_csv(cmd_family_scan(cfg));
    } else if (oracle->parsed()) {
      cfg.command = "oracle";
      json_or_csv(cmd_oracle(cfg));
    } else if (mixing->parsed()) {
      cfg.command = "mixing-check";
      json_or_csv(cmd_mixing_check(cfg));
    }
  } catch (const InvalidInput& e) {
    err << "qwsed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "qwsed: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qwsed::cli
