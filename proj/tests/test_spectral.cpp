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

#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

#include "qwsed/error.hpp"
#include "qwsed/family.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/walk.hpp"

namespace qwsed {
namespace {

constexpr double kPi = std::numbers::pi;

SpectralDecomposition dec(const WeightedGraph& g, MatrixKind k = MatrixKind::adjacency()) {
  return decompose(assemble(g, k));
}

SpectralDecomposition dec(const std::string& family, MatrixKind k = MatrixKind::adjacency()) {
  return dec(build_family(parse_family(family)), k);
}

TEST(Decompose, CompleteGraph) {
  const SpectralDecomposition d = dec(complete_graph(3));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.eigenvalues()[0], 2.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues()[1], -1.0, 1e-12);
  EXPECT_EQ(d.multiplicities(), (std::vector<std::size_t>{1, 2}));
  EXPECT_LE((d.projector(0) - Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(Decompose, Path3) {
  const SpectralDecomposition d = dec(path_graph(3));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_NEAR(d.eigenvalues()[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(d.eigenvalues()[1], 0.0, 1e-12);
  EXPECT_NEAR(d.eigenvalues()[2], -std::sqrt(2.0), 1e-12);
}

TEST(Decompose, DoubleStarSpectrum) {
  const int k = 3;
  const SpectralDecomposition d = dec("doublestar:3,3");
  const double s = std::sqrt(4.0 * k + 1.0);
  const std::vector<double> expected = {(1 + s) / 2, (s - 1) / 2, 0.0, (1 - s) / 2, -(1 + s) / 2};
  ASSERT_EQ(d.size(), expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) {
    EXPECT_NEAR(d.eigenvalues()[j], expected[j], 1e-12);
    EXPECT_EQ(d.multiplicities()[j], j == 2 ? 2u * k - 2u : 1u);
  }
}

TEST(Decompose, Invariants) {
  for (const char* f : {"rook:3,4", "doublestar:2,5", "lollipop:5,3", "cone:cycle:7"}) {
    const SpectralDecomposition d = dec(f, MatrixKind::laplacian());
    EXPECT_LE(d.completeness_error(), 1e-9) << f;
    EXPECT_LE(d.projector_algebra_error(), 1e-9) << f;
    EXPECT_LE(d.reconstruction_error(), 1e-9) << f;
  }
}

TEST(Decompose, ClusterTolerance) {
  Hamiltonian h;
  h.kind = MatrixKind::adjacency();
  h.matrix = Eigen::Vector3d(1.0, 1.0 + 1e-12, 2.0).asDiagonal();
  EXPECT_EQ(decompose(h).size(), 2u);
  SpectralOptions tight;
  tight.cluster_tol = 1e-14;
  EXPECT_EQ(decompose(h, tight).size(), 3u);
}

TEST(Support, PathLeaf) {
  const EigenvalueSupport s = support(dec(path_graph(3)), 0);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s.weights[0], 0.25, 1e-12);
  EXPECT_NEAR(s.weights[1], 0.5, 1e-12);
  EXPECT_NEAR(s.weights[2], 0.25, 1e-12);
}

TEST(Support, CompleteVertex) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const EigenvalueSupport s = support(dec(complete_graph(n)), n - 1);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s.eigenvalues[0], static_cast<double>(n) - 1.0, 1e-12);
    EXPECT_NEAR(s.weights[0], 1.0 / static_cast<double>(n), 1e-12);
    EXPECT_NEAR(s.weights[1], 1.0 - 1.0 / static_cast<double>(n), 1e-12);
  }
}

// Independent oracle: group eigenvectors of a plain eigensolve by rounded
// eigenvalue.
std::map<long long, double> brute_support(const Eigen::MatrixXd& h, VertexId u) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  std::map<long long, double> out;
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    const double w = es.eigenvectors()(static_cast<Eigen::Index>(u), k);
    const auto key = static_cast<long long>(std::llround(es.eigenvalues()(k) * 1e6));
    out[key] += w * w;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second > 1e-18 ? std::next(it) : out.erase(it);
  }
  return out;
}

TEST(Support, StarLaplacianLeafMatchesBruteForce) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const WeightedGraph g = star_graph(n);
    const SpectralDecomposition d = dec(g, MatrixKind::laplacian());
    const EigenvalueSupport s = support(d, 1);
    const auto oracle = brute_support(assemble(g, MatrixKind::laplacian()).matrix, 1);
    ASSERT_EQ(s.size(), 3u);
    ASSERT_EQ(oracle.size(), 3u);
    EXPECT_NEAR(s.eigenvalues[0], static_cast<double>(n) + 1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[2], 0.0, 1e-12);
    std::size_t k = s.size();
    for (const auto& [key, w] : oracle) {
      --k;
      EXPECT_NEAR(s.eigenvalues[k], static_cast<double>(key) * 1e-6, 1e-6);
      EXPECT_NEAR(s.weights[k], w, 1e-12);
    }
  }
}

TEST(Support, WeightsSumToOne) {
  const SpectralDecomposition d = dec("barbell:4,3,5", MatrixKind::normalized_laplacian());
  for (VertexId u = 0; u < d.order(); ++u) {
    double sum = 0.0;
    for (double w : support(d, u).weights) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(Cospectral, Examples) {
  const SpectralDecomposition star = dec(star_graph(3));
  EXPECT_TRUE(are_cospectral(star, 1, 2));
  EXPECT_FALSE(are_cospectral(star, 0, 1));
  const SpectralDecomposition cone = dec("doublecone:disconnected:cycle:4", MatrixKind::laplacian());
  EXPECT_TRUE(are_cospectral(cone, 0, 1));
}

TEST(StrongCospectral, DoubleConeApexes) {
  for (MatrixKind k : {MatrixKind::adjacency(), MatrixKind::laplacian()}) {
    const SpectralDecomposition d = dec("doublecone:disconnected:cycle:5", k);
    const StrongCospectralResult r = strong_cospectral(d, 0, 1);
    EXPECT_TRUE(r.strongly_cospectral) << k.to_string();
    EXPECT_EQ(r.plus.size() + r.minus.size(), support(d, 0).size());
    double plus = 0.0;
    const EigenvalueSupport s = support(d, 0);
    for (std::size_t j : r.plus) plus += s.weights[*s.position(j)];
    EXPECT_NEAR(plus, 0.5, 1e-9);
  }
}

TEST(StrongCospectral, StarLeavesAreNot) {
  const SpectralDecomposition d = dec(star_graph(3));
  const StrongCospectralResult r = strong_cospectral(d, 1, 2);
  EXPECT_FALSE(r.strongly_cospectral);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NEAR(d.eigenvalues()[*r.witness], 0.0, 1e-12);
  EXPECT_THROW(strong_cospectral(d, 1, 1), InvalidInput);
}

TEST(Twins, StarLeaves) {
  const auto sets = find_twin_sets(star_graph(5), MatrixKind::adjacency());
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0].vertices, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_EQ(sets[0].omega, 0.0);
  EXPECT_EQ(sets[0].eta, 0.0);
  EXPECT_EQ(sets[0].theta, 0.0);
}

TEST(Twins, CompleteGraph) {
  const auto sets = find_twin_sets(complete_graph(6), MatrixKind::adjacency());
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0].vertices.size(), 6u);
  EXPECT_EQ(sets[0].eta, 1.0);
  EXPECT_EQ(sets[0].theta, -1.0);
}

TEST(Twins, VertexBlowUpOfC4) {
  const std::vector<BlowUpPart> parts(4, {2, PartFill::Empty});
  const WeightedGraph g = blow_up(cycle_graph(4), BlowUpMode::Vertex, parts);
  const auto sets = find_twin_sets(g, MatrixKind::adjacency());
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].vertices.size(), 4u);
  EXPECT_EQ(sets[1].vertices.size(), 4u);
}

TEST(Twins, ThetaPerKind) {
  // K_3 inside K_3 v C_4: omega = 0, eta = 1, deg = 6.
  const WeightedGraph g = join(complete_graph(3), cycle_graph(4));
  const struct {
    MatrixKind kind;
    double theta;
  } cases[] = {{MatrixKind::adjacency(), -1.0},
               {MatrixKind::laplacian(), 7.0},
               {MatrixKind::generalized(0.5), 2.0},
               {MatrixKind::normalized_adjacency(), -1.0 / 6.0},
               {MatrixKind::normalized_laplacian(), 1.0 + 1.0 / 6.0}};
  for (const auto& c : cases) {
    const auto sets = find_twin_sets(g, c.kind);
    const auto t = twin_set_of(sets, 0);
    ASSERT_TRUE(t) << c.kind.to_string();
    EXPECT_EQ(t->vertices, (std::vector<VertexId>{0, 1, 2}));
    EXPECT_NEAR(t->theta, c.theta, 1e-12) << c.kind.to_string();
    EXPECT_TRUE(verify_twin_eigenvector(dec(g, c.kind), *t)) << c.kind.to_string();
  }
}

TEST(Twins, LeavesVerify) {
  const auto sets = find_twin_sets(star_graph(3), MatrixKind::adjacency());
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_TRUE(verify_twin_eigenvector(dec(star_graph(3)), sets[0]));
  TwinSet wrong = sets[0];
  wrong.theta = 1.0;
  EXPECT_FALSE(verify_twin_eigenvector(dec(star_graph(3)), wrong));
}

TEST(Twins, LoopsAndWeights) {
  GraphBuilder b(4);
  b.add_edge(0, 2, 1.5).add_edge(1, 2, 1.5).add_edge(0, 0, 0.7).add_edge(1, 1, 0.7);
  b.add_edge(0, 1, 0.3).add_edge(2, 3, 1.0);
  const WeightedGraph g = b.build();
  const auto sets = find_twin_sets(g, MatrixKind::adjacency());
  const auto t = twin_set_of(sets, 0);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_DOUBLE_EQ(t->omega, 0.7);
  EXPECT_DOUBLE_EQ(t->eta, 0.3);
  EXPECT_NEAR(t->theta, 0.4, 1e-15);
  EXPECT_TRUE(verify_twin_eigenvector(dec(g), *t));
}

TEST(Periodicity, RookIsIntegral) {
  const SpectralDecomposition d = dec("rook:3,4");
  for (VertexId u = 0; u < d.order(); ++u) {
    const PeriodicityInfo p = periodicity(d, u);
    EXPECT_TRUE(p.periodic);
    EXPECT_EQ(p.method, PeriodicityMethod::IntegerSpectrum);
    EXPECT_NEAR(p.period, 2.0 * kPi, 1e-9);
  }
}

TEST(Periodicity, StarLeaves) {
  const PeriodicityInfo p4 = periodicity(dec(star_graph(4)), 1);
  EXPECT_TRUE(p4.periodic);
  EXPECT_NEAR(p4.period, kPi, 1e-9);

  const SpectralDecomposition d3 = dec(star_graph(3));
  const PeriodicityInfo p3 = periodicity(d3, 1);
  EXPECT_TRUE(p3.periodic);
  EXPECT_EQ(p3.method, PeriodicityMethod::RationalRescaled);
  EXPECT_NEAR(p3.period, 2.0 * kPi / std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(std::abs(WalkEvaluator(d3).entry(p3.period, 1, 1)), 1.0, 1e-8);
}

TEST(Periodicity, IrrationalRatiosUndetected) {
  const PeriodicityInfo p = periodicity(dec(path_graph(4)), 0);
  EXPECT_FALSE(p.periodic);
  EXPECT_EQ(p.method, PeriodicityMethod::Undetected);
  EXPECT_EQ(to_string(p.method), "undetected");
}

TEST(Periodicity, SingleEigenvalueSupport) {
  const PeriodicityInfo p = periodicity(dec(empty_graph(3)), 1);
  EXPECT_TRUE(p.periodic);
  EXPECT_NEAR(p.period, 2.0 * kPi, 1e-12);
}

}  // namespace
}  // namespace qwsed
