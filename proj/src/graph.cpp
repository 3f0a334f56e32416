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

#include "qwsed/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "qwsed/error.hpp"

namespace qwsed {

namespace {

const std::map<VertexId, double> kEmptyRow;

}  // namespace

// ---------------------------------------------------------------------------
// WeightedGraph

void WeightedGraph::check_vertex(VertexId u) const {
  if (u >= rows_.size()) {
    throw InvalidInput("vertex " + std::to_string(u) + " out of range [0, " +
                       std::to_string(rows_.size()) + ")");
  }
}

const std::map<VertexId, double>& WeightedGraph::row(VertexId u) const {
  check_vertex(u);
  return rows_[u];
}

double WeightedGraph::weight(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto it = rows_[u].find(v);
  return it == rows_[u].end() ? 0.0 : it->second;
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].count(v) != 0;
}

double WeightedGraph::degree(VertexId u) const {
  check_vertex(u);
  double deg = 0.0;
  for (const auto& [v, w] : rows_[u]) deg += (v == u) ? 2.0 * w : w;
  return deg;
}

bool WeightedGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.u == e.v; });
}

bool WeightedGraph::is_unweighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight == 1.0; });
}

bool WeightedGraph::is_positively_weighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight > 0.0; });
}

bool WeightedGraph::is_connected() const {
  const std::size_t n = order();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (const auto& [v, w] : rows_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

std::optional<double> WeightedGraph::regular_degree() const {
  if (rows_.empty()) return 0.0;
  const double d = degree(0);
  for (VertexId u = 1; u < order(); ++u) {
    if (std::abs(degree(u) - d) > 1e-12 * std::max(1.0, std::abs(d))) {
      return std::nullopt;
    }
  }
  return d;
}

std::optional<VertexId> WeightedGraph::find_label(std::string_view label) const {
  for (VertexId u = 0; u < labels_.size(); ++u) {
    if (labels_[u] == label) return u;
  }
  return std::nullopt;
}

std::uint64_t WeightedGraph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(order());
  for (const Edge& e : edges_) {
    mix(e.u);
    mix(e.v);
    mix(std::bit_cast<std::uint64_t>(e.weight));
  }
  return h;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::size_t order) : rows_(order) {}

GraphBuilder::GraphBuilder(const WeightedGraph& start)
    : rows_(start.rows_), labels_(start.labels_) {}

VertexId GraphBuilder::add_vertex() {
  rows_.emplace_back();
  if (!labels_.empty()) labels_.emplace_back();
  return rows_.size() - 1;
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v, double weight) {
  if (u >= rows_.size() || v >= rows_.size()) {
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside [0, " +
                       std::to_string(rows_.size()) + ")");
  }
  if (!std::isfinite(weight) || weight == 0.0) {
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has a zero or non-finite weight");
  }
  if (rows_[u].count(v) != 0) {
    throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
  }
  rows_[u][v] = weight;
  rows_[v][u] = weight;
  return *this;
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
  return u < rows_.size() && rows_[u].count(v) != 0;
}

GraphBuilder& GraphBuilder::set_label(VertexId u, std::string label) {
  if (u >= rows_.size()) throw InvalidInput("label for unknown vertex");
  if (labels_.empty()) labels_.resize(rows_.size());
  labels_[u] = std::move(label);
  return *this;
}

WeightedGraph GraphBuilder::build() const {
  WeightedGraph g;
  g.rows_ = rows_;
  g.labels_ = labels_;
  for (VertexId u = 0; u < rows_.size(); ++u) {
    for (const auto& [v, w] : rows_[u]) {
      if (u <= v) g.edges_.push_back({u, v, w});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Named graphs

WeightedGraph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

WeightedGraph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

WeightedGraph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

WeightedGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build();
}

WeightedGraph star_graph(std::size_t n) { return join(empty_graph(1), empty_graph(n)); }

// ---------------------------------------------------------------------------
// Operations

WeightedGraph disjoint_union(const WeightedGraph& x, const WeightedGraph& y) {
  const std::size_t nx = x.order();
  GraphBuilder b(nx + y.order());
  for (const Edge& e : x.edges()) b.add_edge(e.u, e.v, e.weight);
  for (const Edge& e : y.edges()) b.add_edge(nx + e.u, nx + e.v, e.weight);
  return b.build();
}

WeightedGraph join(const WeightedGraph& x, const WeightedGraph& y) {
  const std::size_t nx = x.order();
  GraphBuilder b(nx + y.order());
  for (const Edge& e : x.edges()) b.add_edge(e.u, e.v, e.weight);
  for (const Edge& e : y.edges()) b.add_edge(nx + e.u, nx + e.v, e.weight);
  for (VertexId u = 0; u < nx; ++u) {
    for (VertexId v = 0; v < y.order(); ++v) b.add_edge(u, nx + v, 1.0);
  }
  return b.build();
}

WeightedGraph cartesian_product(const WeightedGraph& x, const WeightedGraph& y) {
  const std::size_t nx = x.order();
  const std::size_t ny = y.order();
  GraphBuilder b(nx * ny);
  auto id = [ny](VertexId u, VertexId a) { return u * ny + a; };
  for (VertexId u = 0; u < nx; ++u) {
    for (const Edge& e : y.edges()) b.add_edge(id(u, e.u), id(u, e.v), e.weight);
  }
  for (VertexId a = 0; a < ny; ++a) {
    for (const Edge& e : x.edges()) b.add_edge(id(e.u, a), id(e.v, a), e.weight);
  }
  return b.build();
}

WeightedGraph direct_product(const WeightedGraph& x, const WeightedGraph& y) {
  const std::size_t ny = y.order();
  GraphBuilder b(x.order() * ny);
  auto id = [ny](VertexId u, VertexId a) { return u * ny + a; };
  for (const Edge& ex : x.edges()) {
    for (const Edge& ey : y.edges()) {
      const double w = ex.weight * ey.weight;
      // [u,v] x [a,b] yields (u,a)-(v,b) and (u,b)-(v,a); they coincide when
      // either factor edge is a loop.
      b.add_edge(id(ex.u, ey.u), id(ex.v, ey.v), w);
      if (ex.u != ex.v && ey.u != ey.v) {
        b.add_edge(id(ex.u, ey.v), id(ex.v, ey.u), w);
      }
    }
  }
  return b.build();
}

WeightedGraph complement(const WeightedGraph& x) {
  if (!x.is_simple() || !x.is_unweighted()) {
    throw InvalidInput("complement requires a simple unweighted graph");
  }
  const std::size_t n = x.order();
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!x.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

WeightedGraph blow_up(const WeightedGraph& x, BlowUpMode mode,
                      std::span<const BlowUpPart> parts) {
  for (const BlowUpPart& p : parts) {
    if (p.size == 0) throw InvalidInput("blow-up parts must have size >= 1");
  }
  auto fill_part = [](GraphBuilder& b, VertexId first, const BlowUpPart& p) {
    if (p.fill != PartFill::Complete) return;
    for (VertexId i = 0; i < p.size; ++i) {
      for (VertexId j = i + 1; j < p.size; ++j) b.add_edge(first + i, first + j);
    }
  };

  if (mode == BlowUpMode::Vertex) {
    if (parts.size() != x.order()) {
      throw InvalidInput("vertex blow-up needs one part per vertex");
    }
    std::vector<VertexId> first(x.order() + 1, 0);
    for (VertexId u = 0; u < x.order(); ++u) first[u + 1] = first[u] + parts[u].size;
    GraphBuilder b(first.back());
    for (VertexId u = 0; u < x.order(); ++u) fill_part(b, first[u], parts[u]);
    for (const Edge& e : x.edges()) {
      if (e.u == e.v) {
        for (VertexId i = 0; i < parts[e.u].size; ++i) {
          b.add_edge(first[e.u] + i, first[e.u] + i, e.weight);
        }
        continue;
      }
      for (VertexId i = 0; i < parts[e.u].size; ++i) {
        for (VertexId j = 0; j < parts[e.v].size; ++j) {
          b.add_edge(first[e.u] + i, first[e.v] + j, e.weight);
        }
      }
    }
    return b.build();
  }

  if (x.has_loops()) {
    throw InvalidInput("edge blow-up is defined only for edges with distinct endpoints");
  }
  if (parts.size() != x.edge_count()) {
    throw InvalidInput("edge blow-up needs one part per edge");
  }
  GraphBuilder b(x.order());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Edge& e = x.edges()[k];
    const VertexId first = b.order();
    for (std::size_t i = 0; i < parts[k].size; ++i) b.add_vertex();
    fill_part(b, first, parts[k]);
    for (VertexId i = 0; i < parts[k].size; ++i) {
      b.add_edge(e.u, first + i, e.weight);
      b.add_edge(e.v, first + i, e.weight);
    }
  }
  return b.build();
}

WeightedGraph attach_tails(const WeightedGraph& x,
                           std::span<const TailAttachment> attachments) {
  GraphBuilder b(x);
  for (const TailAttachment& a : attachments) {
    if (a.root >= x.order()) throw InvalidInput("tail root out of range");
    if (a.length == 0) throw InvalidInput("tail length must be >= 1");
    VertexId prev = a.root;
    for (std::size_t i = 0; i < a.length; ++i) {
      const VertexId next = b.add_vertex();
      b.add_edge(prev, next);
      prev = next;
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw InvalidInput("empty graph file");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 'n m'");
    }
  }
  GraphBuilder b(static_cast<std::size_t>(n));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno)) {
      throw InvalidInput("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(k));
    }
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    double w = 0.0;
    if (!(fields >> u >> v >> w) || u < 0 || v < 0) {
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v w'");
    }
    try {
      b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return b.build();
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  const auto old_precision = out.precision(17);
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  out.precision(old_precision);
}

}  // namespace qwsed
