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

#ifndef QWSED_MATRICES_HPP_
#define QWSED_MATRICES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwsed/graph.hpp"

namespace qwsed {

struct MatrixKind {
  enum class Type {
    Adjacency,
    Laplacian,
    GeneralizedAdjacency,  // alpha * D + A
    NormalizedAdjacency,   // D^{-1/2} A D^{-1/2}
    NormalizedLaplacian,   // I - D^{-1/2} A D^{-1/2}
  };

  Type type = Type::Adjacency;
  double alpha = 0.0;  // GeneralizedAdjacency only

  static MatrixKind adjacency() { return {Type::Adjacency, 0.0}; }
  static MatrixKind laplacian() { return {Type::Laplacian, 0.0}; }
  static MatrixKind generalized(double a) { return {Type::GeneralizedAdjacency, a}; }
  static MatrixKind normalized_adjacency() { return {Type::NormalizedAdjacency, 0.0}; }
  static MatrixKind normalized_laplacian() { return {Type::NormalizedLaplacian, 0.0}; }

  // adjacency | laplacian | gen:<alpha> | norm-adj | norm-lap
  static MatrixKind parse(std::string_view text);
  std::string to_string() const;

  bool normalized() const noexcept {
    return type == Type::NormalizedAdjacency || type == Type::NormalizedLaplacian;
  }

  // Walks on Cartesian products factor as Kronecker products of the factor
  // walks: A, L and alpha D + A.
  bool kronecker_compatible() const noexcept { return !normalized(); }

  friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

struct Hamiltonian {
  MatrixKind kind;
  Eigen::MatrixXd matrix;
  std::uint64_t graph_hash = 0;
  // Vertices of degree zero under a normalized kind (their D^{-1/2} entry is 0).
  std::vector<VertexId> zero_degree;
};

// Throws InvalidInput on a negative degree under a normalized kind.
Hamiltonian assemble(const WeightedGraph& g, MatrixKind kind);

Eigen::MatrixXd adjacency_matrix(const WeightedGraph& g);
Eigen::VectorXd degree_vector(const WeightedGraph& g);

}  // namespace qwsed

#endif  // QWSED_MATRICES_HPP_
