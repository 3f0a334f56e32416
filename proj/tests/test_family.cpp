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

#include <cstdio>
#include <fstream>

#include "qwsed/error.hpp"
#include "qwsed/family.hpp"

namespace qwsed {
namespace {

WeightedGraph build(const std::string& text) { return build_family(parse_family(text)); }

TEST(Family, HammingIsRookPower) {
  const WeightedGraph g = build("hamming:2,3");
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.regular_degree(), 4.0);
  EXPECT_EQ(g, cartesian_product(complete_graph(3), complete_graph(3)));
  EXPECT_EQ(build("rook:k=2,n=3"), g);
}

TEST(Family, RookOfOneFactorIsComplete) {
  EXPECT_EQ(build("rook:6"), complete_graph(6));
  EXPECT_EQ(build("rook:3,4").order(), 12u);
}

TEST(Family, DoubleStarLayout) {
  const FamilySpec spec = parse_family("doublestar:2,3");
  const WeightedGraph g = build_family(spec);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_TRUE(g.adjacent(0, 2) && g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(3, 4) && g.adjacent(3, 6));
  EXPECT_EQ(role_of(spec, 2), VertexRole::Internal);
  EXPECT_EQ(role_of(spec, 0), VertexRole::Leaf);
  EXPECT_EQ(build("doublestar:2,2").order(), 6u);
}

TEST(Family, ThresholdExample) {
  // ((O_3 v K_2) u O_4) v K_1
  const WeightedGraph g = build("threshold:3,2,4,1");
  EXPECT_EQ(g.order(), 10u);
  EXPECT_DOUBLE_EQ(g.degree(9), 9.0);
  EXPECT_DOUBLE_EQ(g.degree(0), 3.0);  // two clique vertices and the dominating vertex
  EXPECT_DOUBLE_EQ(g.degree(3), 5.0);  // three O_3, one K_2 partner, one dominating
  EXPECT_DOUBLE_EQ(g.degree(5), 1.0);
  EXPECT_EQ(g.edge_count(), 6u + 1u + 9u);
}

TEST(Family, LollipopBarbellTails) {
  const FamilySpec l = parse_family("lollipop:4,2");
  EXPECT_EQ(build_family(l).order(), 6u);
  EXPECT_EQ(role_of(l, 0), VertexRole::Attachment);
  EXPECT_EQ(role_of(l, 1), VertexRole::Clique);
  EXPECT_EQ(role_of(l, 5), VertexRole::Tail);

  const FamilySpec b = parse_family("barbell:4,2,5");
  const WeightedGraph bg = build_family(b);
  EXPECT_EQ(bg.order(), 11u);
  EXPECT_TRUE(bg.is_connected());
  EXPECT_EQ(role_of(b, 4), VertexRole::Attachment);
  EXPECT_EQ(role_of(b, 9), VertexRole::Tail);

  const WeightedGraph x = build("xtail:3,4,2");
  EXPECT_EQ(x.order(), 3u + 4u + 4u * 2u);
  const WeightedGraph y = build("ytail:3,4,2");
  EXPECT_EQ(y.order(), 3u + 4u + 3u * 2u);
  EXPECT_EQ(build("xtail:3,4,0"), join(complete_graph(3), empty_graph(4)));
}

TEST(Family, ConesAndJoins) {
  const FamilySpec c = parse_family("cone:cycle:5");
  EXPECT_EQ(build_family(c), join(complete_graph(1), cycle_graph(5)));
  EXPECT_EQ(role_of(c, 0), VertexRole::Apex);
  EXPECT_EQ(build("doublecone:disconnected:cycle:4"), join(empty_graph(2), cycle_graph(4)));
  EXPECT_EQ(build("doublecone:connected:path:3"), join(complete_graph(2), path_graph(3)));
  EXPECT_EQ(build("kjoin:3:path:4"), join(complete_graph(3), path_graph(4)));
  EXPECT_EQ(build("ojoin:3:cycle:5"), join(empty_graph(3), cycle_graph(5)));
  EXPECT_EQ(build("multipartite:2,3"), join(empty_graph(2), empty_graph(3)));
}

TEST(Family, BaseFromFile) {
  const std::string path = ::testing::TempDir() + "qwsed_base.graph";
  {
    std::ofstream f(path);
    f << "4 4\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n";
  }
  const FamilySpec s = parse_family("doublecone:disconnected:@" + path);
  EXPECT_EQ(build_family(s), join(empty_graph(2), cycle_graph(4)));
  std::remove(path.c_str());
}

TEST(Family, DomainChecks) {
  EXPECT_THROW(parse_family("lollipop:3,1"), InvalidInput);
  EXPECT_THROW(parse_family("lollipop:4,0"), InvalidInput);
  EXPECT_THROW(parse_family("doublestar:0,2"), InvalidInput);
  EXPECT_THROW(parse_family("cycle:2"), InvalidInput);
  EXPECT_THROW(parse_family("barbell:4,1"), InvalidInput);
  EXPECT_THROW(parse_family("nosuch:3"), InvalidInput);
  EXPECT_THROW(parse_family("complete:x"), InvalidInput);
  EXPECT_THROW(parse_family("cone:"), InvalidInput);
}

TEST(Family, SpecRoundTrip) {
  for (const char* text : {"complete:5", "rook:3,4", "doublecone:disconnected:cycle:4",
                           "doublestar:2,3", "kjoin:2:path:3"}) {
    EXPECT_EQ(parse_family(text).to_string(), text);
  }
}

TEST(Family, Roles) {
  EXPECT_EQ(parse_role("centre"), VertexRole::Center);
  EXPECT_EQ(parse_role("apex"), VertexRole::Apex);
  EXPECT_FALSE(parse_role("nonsense").has_value());
  const FamilySpec star = parse_family("star:5");
  EXPECT_EQ(first_vertex_with_role(star, VertexRole::Leaf), 1u);
  EXPECT_EQ(first_vertex_with_role(star, VertexRole::Center), 0u);
  EXPECT_FALSE(first_vertex_with_role(star, VertexRole::Apex).has_value());
}

TEST(Family, ExpandScan) {
  const auto members = expand_scan("rook:k=2,n=3..6");
  ASSERT_EQ(members.size(), 4u);
  EXPECT_EQ(members.front().value, 3);
  EXPECT_EQ(members.back().spec, "rook:k=2,n=6");
  const auto single = expand_scan("star:7..7");
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].spec, "star:7");
  EXPECT_THROW(expand_scan("star:9..3"), InvalidInput);
  EXPECT_EQ(expand_scan("star:4").size(), 1u);
}

TEST(Family, ProductFactors) {
  const auto f = product_factors(parse_family("rook:3,5"));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[1].to_string(), "complete:5");
  EXPECT_EQ(product_factors(parse_family("hamming:3,4")).size(), 3u);
  EXPECT_TRUE(product_factors(parse_family("star:3")).empty());
}

}  // namespace
}  // namespace qwsed
