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

#ifndef QWSED_GRAPH_HPP_
#define QWSED_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qwsed {

using VertexId = std::size_t;

// An undirected edge in canonical form (u <= v). u == v is a loop.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

// Undirected weighted graph with optional loops and no multi-edges.
//
// Values are immutable once built; use GraphBuilder to construct one. Weights
// are finite and nonzero. Vertex ids are dense in [0, order()).
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Canonical edge list, sorted by (u, v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Neighbour -> weight. Includes u itself when u carries a loop.
  const std::map<VertexId, double>& row(VertexId u) const;

  // Weight of [u, v], or 0 when absent.
  double weight(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  double loop_weight(VertexId u) const { return weight(u, u); }

  // deg(u) = 2 w(u,u) + sum_{j != u} w(u,j). Loops count twice.
  double degree(VertexId u) const;

  bool has_loops() const noexcept;
  bool is_unweighted() const noexcept;  // every weight equals 1
  bool is_simple() const noexcept { return !has_loops(); }
  bool is_positively_weighted() const noexcept;
  bool is_connected() const;

  // Common degree when D(X) is a scalar matrix.
  std::optional<double> regular_degree() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find_label(std::string_view label) const;

  // Stable FNV-1a hash of order and edge list (labels excluded).
  std::uint64_t fingerprint() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.rows_.size() == b.rows_.size() && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  void check_vertex(VertexId u) const;

  std::vector<std::map<VertexId, double>> rows_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order = 0);
  explicit GraphBuilder(const WeightedGraph& start);

  std::size_t order() const noexcept { return rows_.size(); }
  VertexId add_vertex();

  // Throws InvalidInput on out-of-range ids, duplicate edges, and zero or
  // non-finite weights.
  GraphBuilder& add_edge(VertexId u, VertexId v, double weight = 1.0);
  bool has_edge(VertexId u, VertexId v) const;
  GraphBuilder& set_label(VertexId u, std::string label);

  WeightedGraph build() const;

 private:
  std::vector<std::map<VertexId, double>> rows_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Named graphs. All simple and unweighted.

WeightedGraph complete_graph(std::size_t n);
WeightedGraph empty_graph(std::size_t n);
WeightedGraph path_graph(std::size_t n);
WeightedGraph cycle_graph(std::size_t n);
// K_{1,n}: centre is vertex 0, leaves are 1..n.
WeightedGraph star_graph(std::size_t n);

// ---------------------------------------------------------------------------
// Operations. Vertex ids of the result: x's vertices first, then y's
// (join/union), or row-major pairs u * |V(y)| + x (products).

WeightedGraph join(const WeightedGraph& x, const WeightedGraph& y);
WeightedGraph disjoint_union(const WeightedGraph& x, const WeightedGraph& y);
WeightedGraph cartesian_product(const WeightedGraph& x, const WeightedGraph& y);
WeightedGraph direct_product(const WeightedGraph& x, const WeightedGraph& y);

// Requires a simple unweighted graph.
WeightedGraph complement(const WeightedGraph& x);

enum class BlowUpMode { Vertex, Edge };
enum class PartFill { Empty, Complete };

struct BlowUpPart {
  std::size_t size = 1;
  PartFill fill = PartFill::Empty;
};

// Vertex mode: one part per vertex, part j occupies a contiguous block in the
// order of the original vertices; a loop on v_j becomes a loop on every vertex
// of its part. Edge mode: one part per edge in canonical edge order; the
// original vertices keep ids [0, n) and part vertices follow. Edge mode
// rejects looped input.
WeightedGraph blow_up(const WeightedGraph& x, BlowUpMode mode,
                      std::span<const BlowUpPart> parts);

struct TailAttachment {
  VertexId root = 0;
  std::size_t length = 1;
};

// Appends, for each attachment in order, a path of `length` new vertices whose
// first vertex is joined to `root`. Unit weights.
WeightedGraph attach_tails(const WeightedGraph& x,
                           std::span<const TailAttachment> attachments);

// ---------------------------------------------------------------------------
// Text format: first line "n m", then m lines "u v w" (0-based, u == v is a
// loop). Blank lines and lines starting with '#' are ignored.

WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace qwsed

#endif  // QWSED_GRAPH_HPP_
