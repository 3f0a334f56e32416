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

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "qwsed/error.hpp"
#include "qwsed/graph.hpp"

namespace qwsed {
namespace {

bool is_complete(const WeightedGraph& g) {
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) return false;
    }
  }
  return !g.has_loops();
}

TEST(GraphBuilder, RejectsBadEdges) {
  GraphBuilder b(3);
  b.add_edge(0, 1, 2.5);
  EXPECT_THROW(b.add_edge(1, 0), InvalidInput);
  EXPECT_THROW(b.add_edge(0, 3), InvalidInput);
  EXPECT_THROW(b.add_edge(0, 2, 0.0), InvalidInput);
  EXPECT_THROW(b.add_edge(0, 2, std::numeric_limits<double>::infinity()), InvalidInput);
  b.add_edge(2, 2, -1.0);
  const WeightedGraph g = b.build();
  EXPECT_EQ(g.order(), 3u);
  EXPECT_DOUBLE_EQ(g.weight(1, 0), 2.5);
  EXPECT_DOUBLE_EQ(g.loop_weight(2), -1.0);
  EXPECT_TRUE(g.has_loops());
}

TEST(WeightedGraph, CanonicalEdgesAndDegree) {
  GraphBuilder b(3);
  b.add_edge(2, 0, 1.5).add_edge(1, 1, 0.5);
  const WeightedGraph g = b.build();
  for (const auto& e : g.edges()) EXPECT_LE(e.u, e.v);
  EXPECT_DOUBLE_EQ(g.degree(1), 1.0);  // loops count twice
  EXPECT_DOUBLE_EQ(g.degree(0), 1.5);
  EXPECT_FALSE(g.is_connected());
}

TEST(WeightedGraph, RegularDegree) {
  EXPECT_EQ(cycle_graph(6).regular_degree(), 2.0);
  EXPECT_FALSE(path_graph(3).regular_degree().has_value());
  EXPECT_EQ(empty_graph(4).regular_degree(), 0.0);
}

TEST(Join, StarIsConeOverEmpty) {
  const WeightedGraph s = join(empty_graph(1), empty_graph(5));
  EXPECT_EQ(s, star_graph(5));
  EXPECT_EQ(s.edge_count(), 5u);
  EXPECT_DOUBLE_EQ(s.degree(0), 5.0);
}

TEST(Join, DisconnectedDoubleConeOverC4) {
  const WeightedGraph g = join(empty_graph(2), cycle_graph(4));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_DOUBLE_EQ(g.degree(0), 4.0);
  EXPECT_DOUBLE_EQ(g.degree(1), 4.0);
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Join, CompletesGiveComplete) {
  const WeightedGraph g = join(complete_graph(2), complete_graph(3));
  EXPECT_EQ(g, complete_graph(5));
  EXPECT_TRUE(is_complete(g));
}

TEST(Join, DegreesGrowByOtherOrder) {
  const WeightedGraph x = path_graph(4);
  const WeightedGraph y = cycle_graph(5);
  const WeightedGraph g = join(x, y);
  for (VertexId u = 0; u < x.order(); ++u) EXPECT_DOUBLE_EQ(g.degree(u), x.degree(u) + 5.0);
}

TEST(CartesianProduct, K2SquaredIsC4) {
  const WeightedGraph g = cartesian_product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.regular_degree(), 2.0);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(g.adjacent(0, 3));  // (0,0) and (1,1)
}

TEST(CartesianProduct, RookK3K4) {
  const WeightedGraph g = cartesian_product(complete_graph(3), complete_graph(4));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.regular_degree(), 5.0);
  // Row-major ids: (u, x) -> 4u + x.
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_TRUE(g.adjacent(0, 8));
  EXPECT_FALSE(g.adjacent(0, 5));
}

TEST(CartesianProduct, IdentityFactor) {
  const WeightedGraph y = path_graph(5);
  EXPECT_EQ(cartesian_product(complete_graph(1), y), y);
}

TEST(CartesianProduct, DegreesAdd) {
  const WeightedGraph x = path_graph(3);
  const WeightedGraph y = star_graph(3);
  const WeightedGraph g = cartesian_product(x, y);
  EXPECT_EQ(g.order(), x.order() * y.order());
  for (VertexId u = 0; u < x.order(); ++u) {
    for (VertexId a = 0; a < y.order(); ++a) {
      EXPECT_DOUBLE_EQ(g.degree(u * y.order() + a), x.degree(u) + y.degree(a));
    }
  }
}

TEST(CartesianProduct, CopiesWeights) {
  GraphBuilder b(2);
  b.add_edge(0, 1, 3.0);
  const WeightedGraph g = cartesian_product(b.build(), complete_graph(2));
  EXPECT_DOUBLE_EQ(g.weight(0, 2), 3.0);
  EXPECT_DOUBLE_EQ(g.weight(0, 1), 1.0);
}

TEST(DirectProduct, K2K2IsPerfectMatching) {
  const WeightedGraph g = direct_product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(DirectProduct, K2P3) {
  // Hand enumeration: (0,a)-(1,b) and (1,a)-(0,b) for each P_3 edge a-b.
  const WeightedGraph g = direct_product(complete_graph(2), path_graph(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.edge_count(), 4u);
  const std::vector<std::pair<VertexId, VertexId>> expected = {{0, 4}, {1, 3}, {1, 5}, {2, 4}};
  for (const auto& [u, v] : expected) EXPECT_TRUE(g.adjacent(u, v)) << u << "-" << v;
}

TEST(DirectProduct, K1GivesEdgeless) {
  const WeightedGraph g = direct_product(complete_graph(1), cycle_graph(5));
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(DirectProduct, MultipliesWeights) {
  GraphBuilder a(2);
  a.add_edge(0, 1, 2.0);
  GraphBuilder b(2);
  b.add_edge(0, 1, 3.0);
  const WeightedGraph g = direct_product(a.build(), b.build());
  EXPECT_DOUBLE_EQ(g.weight(0, 3), 6.0);
}

TEST(Complement, Basics) {
  EXPECT_EQ(complement(complete_graph(5)), empty_graph(5));
  const WeightedGraph c5 = complement(cycle_graph(5));
  EXPECT_EQ(c5.regular_degree(), 2.0);
  EXPECT_TRUE(c5.is_connected());
  // K_{1,3} complement is K_3 on the leaves plus an isolated centre.
  const WeightedGraph s = complement(star_graph(3));
  EXPECT_DOUBLE_EQ(s.degree(0), 0.0);
  EXPECT_TRUE(s.adjacent(1, 2) && s.adjacent(1, 3) && s.adjacent(2, 3));
  EXPECT_EQ(s.edge_count(), 3u);
}

TEST(Complement, Involution) {
  for (const WeightedGraph& g : {path_graph(6), star_graph(4), cycle_graph(7)}) {
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Complement, RejectsWeightedOrLooped) {
  GraphBuilder w(2);
  w.add_edge(0, 1, 2.0);
  EXPECT_THROW(complement(w.build()), InvalidInput);
  GraphBuilder l(2);
  l.add_edge(0, 0);
  EXPECT_THROW(complement(l.build()), InvalidInput);
}

TEST(BlowUp, C4VertexDoubling) {
  const std::vector<BlowUpPart> parts(4, {2, PartFill::Empty});
  const WeightedGraph g = blow_up(cycle_graph(4), BlowUpMode::Vertex, parts);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.edge_count(), 16u);
}

TEST(BlowUp, C4EdgeTripling) {
  const std::vector<BlowUpPart> parts(4, {3, PartFill::Empty});
  const WeightedGraph g = blow_up(cycle_graph(4), BlowUpMode::Edge, parts);
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(g.edge_count(), 4u * 3u * 2u);
}

TEST(BlowUp, K2GivesCompleteBipartiteAndComplete) {
  const std::vector<BlowUpPart> empty = {{2, PartFill::Empty}, {3, PartFill::Empty}};
  const WeightedGraph kmn = blow_up(complete_graph(2), BlowUpMode::Vertex, empty);
  EXPECT_EQ(kmn, join(empty_graph(2), empty_graph(3)));
  const std::vector<BlowUpPart> full = {{2, PartFill::Complete}, {3, PartFill::Complete}};
  EXPECT_EQ(blow_up(complete_graph(2), BlowUpMode::Vertex, full), complete_graph(5));
}

TEST(BlowUp, UnitSizesAreIdentity) {
  const WeightedGraph x = path_graph(5);
  const std::vector<BlowUpPart> parts(5, {1, PartFill::Empty});
  EXPECT_EQ(blow_up(x, BlowUpMode::Vertex, parts), x);
}

TEST(BlowUp, EdgeModeRejectsLoops) {
  GraphBuilder b(2);
  b.add_edge(0, 1).add_edge(0, 0);
  const std::vector<BlowUpPart> parts(2, {1, PartFill::Empty});
  EXPECT_THROW(blow_up(b.build(), BlowUpMode::Edge, parts), InvalidInput);
}

TEST(BlowUp, WrongPartCount) {
  const std::vector<BlowUpPart> parts(3, {1, PartFill::Empty});
  EXPECT_THROW(blow_up(cycle_graph(4), BlowUpMode::Vertex, parts), InvalidInput);
}

TEST(AttachTails, Lollipop) {
  const TailAttachment tail{0, 2};
  const WeightedGraph g = attach_tails(complete_graph(4), std::span(&tail, 1));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(4, 5));
  EXPECT_DOUBLE_EQ(g.degree(5), 1.0);
}

TEST(AttachTails, EmptyIsIdentityAndPathFromRoot) {
  const WeightedGraph x = cycle_graph(5);
  EXPECT_EQ(attach_tails(x, {}), x);
  const TailAttachment tail{0, 3};
  EXPECT_EQ(attach_tails(complete_graph(1), std::span(&tail, 1)), path_graph(4));
}

TEST(GraphIo, RoundTrip) {
  GraphBuilder b(4);
  b.add_edge(0, 1, 0.1).add_edge(2, 2, -3.25).add_edge(1, 3, 1.0 / 3.0);
  const WeightedGraph g = b.build();
  std::stringstream s;
  write_graph(s, g);
  EXPECT_EQ(read_graph(s), g);
}

TEST(GraphIo, CommentsAndErrors) {
  std::istringstream ok("# triangle\n3 3\n0 1 1\n\n1 2 1\n0 2 1\n");
  EXPECT_EQ(read_graph(ok), complete_graph(3));
  std::istringstream short_file("3 2\n0 1 1\n");
  EXPECT_THROW(read_graph(short_file), InvalidInput);
  std::istringstream bad_id("2 1\n0 2 1\n");
  EXPECT_THROW(read_graph(bad_id), InvalidInput);
  std::istringstream dup("2 2\n0 1 1\n1 0 1\n");
  EXPECT_THROW(read_graph(dup), InvalidInput);
  EXPECT_THROW(read_graph_file("/nonexistent/graph"), InvalidInput);
}

TEST(WeightedGraph, Fingerprint) {
  EXPECT_EQ(cycle_graph(5).fingerprint(), cycle_graph(5).fingerprint());
  EXPECT_NE(cycle_graph(5).fingerprint(), path_graph(5).fingerprint());
}

}  // namespace
}  // namespace qwsed
