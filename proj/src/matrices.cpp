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

#include "qwsed/matrices.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qwsed/error.hpp"

namespace qwsed {

MatrixKind MatrixKind::parse(std::string_view text) {
  if (text == "adjacency" || text == "A") return adjacency();
  if (text == "laplacian" || text == "L") return laplacian();
  if (text == "norm-adj") return normalized_adjacency();
  if (text == "norm-lap") return normalized_laplacian();
  if (text.substr(0, 4) == "gen:") {
    const std::string value(text.substr(4));
    char* end = nullptr;
    const double a = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(a)) {
      throw InvalidInput("gen:<alpha> needs a finite number, got '" + value + "'");
    }
    return generalized(a);
  }
  throw InvalidInput("unknown matrix kind '" + std::string(text) + "'");
}

std::string MatrixKind::to_string() const {
  switch (type) {
    case Type::Adjacency:
      return "adjacency";
    case Type::Laplacian:
      return "laplacian";
    case Type::GeneralizedAdjacency: {
      std::ostringstream out;
      out.precision(17);
      out << "gen:" << alpha;
      return out.str();
    }
    case Type::NormalizedAdjacency:
      return "norm-adj";
    case Type::NormalizedLaplacian:
      return "norm-lap";
  }
  return "unknown";
}

Eigen::MatrixXd adjacency_matrix(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

Eigen::VectorXd degree_vector(const WeightedGraph& g) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(g.order()));
  for (VertexId u = 0; u < g.order(); ++u) d(u) = g.degree(u);
  return d;
}

Hamiltonian assemble(const WeightedGraph& g, MatrixKind kind) {
  Hamiltonian h;
  h.kind = kind;
  h.graph_hash = g.fingerprint();
  const Eigen::MatrixXd a = adjacency_matrix(g);
  const Eigen::VectorXd d = degree_vector(g);
  const auto n = a.rows();
  switch (kind.type) {
    case MatrixKind::Type::Adjacency:
      h.matrix = a;
      break;
    case MatrixKind::Type::Laplacian:
      h.matrix = -a;
      h.matrix.diagonal() += d;
      break;
    case MatrixKind::Type::GeneralizedAdjacency:
      h.matrix = a;
      h.matrix.diagonal() += kind.alpha * d;
      break;
    case MatrixKind::Type::NormalizedAdjacency:
    case MatrixKind::Type::NormalizedLaplacian: {
      Eigen::VectorXd s(n);
      for (Eigen::Index u = 0; u < n; ++u) {
        if (d(u) < 0.0) {
          throw InvalidInput("vertex " + std::to_string(u) +
                             " has negative degree; normalized matrices need deg >= 0");
        }
        if (d(u) == 0.0) {
          s(u) = 0.0;
          h.zero_degree.push_back(static_cast<VertexId>(u));
        } else {
          s(u) = 1.0 / std::sqrt(d(u));
        }
      }
      h.matrix = Eigen::MatrixXd::Zero(n, n);
      for (const Edge& e : g.edges()) {
        const double w = e.weight * (s(e.u) * s(e.v));
        h.matrix(e.u, e.v) = w;
        h.matrix(e.v, e.u) = w;
      }
      if (kind.type == MatrixKind::Type::NormalizedLaplacian) {
        h.matrix = Eigen::MatrixXd::Identity(n, n) - h.matrix;
      }
      break;
    }
  }
  return h;
}

}  // namespace qwsed
