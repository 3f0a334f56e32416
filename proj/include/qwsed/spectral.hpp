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

#ifndef QWSED_SPECTRAL_HPP_
#define QWSED_SPECTRAL_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwsed/graph.hpp"
#include "qwsed/matrices.hpp"

namespace qwsed {

struct SpectralOptions {
  double cluster_tol = 1e-8;   // relative to max(1, ||H||)
  double support_tol = 1e-10;  // on ||E_j e_u||
};

// H = sum_j lambda_j E_j over distinct eigenvalues, sorted descending.
//
// Projectors are held as orthonormal eigenvector blocks V_j (E_j = V_j V_j^T)
// and expanded on demand.
class SpectralDecomposition {
 public:
  std::size_t order() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t size() const noexcept { return eigenvalues_.size(); }

  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  const std::vector<std::size_t>& multiplicities() const noexcept { return multiplicities_; }
  const Eigen::MatrixXd& block(std::size_t j) const { return blocks_.at(j); }

  Eigen::MatrixXd projector(std::size_t j) const;
  double projector_entry(std::size_t j, VertexId u, VertexId v) const;
  // E_j e_u.
  Eigen::VectorXd projector_column(std::size_t j, VertexId u) const;
  // ||E_j e_u||.
  double projection_norm(std::size_t j, VertexId u) const;

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  const MatrixKind& kind() const noexcept { return kind_; }
  const SpectralOptions& options() const noexcept { return options_; }
  // max |lambda_j|.
  double norm() const noexcept { return norm_; }

  // max-abs entry of sum_j E_j - I.
  double completeness_error() const;
  // max over j, k of max-abs entry of E_j E_k - delta_jk E_j.
  double projector_algebra_error() const;
  // ||sum_j lambda_j E_j - H||_F / max(1, ||H||_F).
  double reconstruction_error() const;

 private:
  friend SpectralDecomposition decompose(const Hamiltonian& h, SpectralOptions options);

  std::vector<double> eigenvalues_;
  std::vector<std::size_t> multiplicities_;
  std::vector<Eigen::MatrixXd> blocks_;
  Eigen::MatrixXd matrix_;
  MatrixKind kind_;
  SpectralOptions options_;
  double norm_ = 0.0;
};

// Throws NumericalError when the eigensolver does not converge.
SpectralDecomposition decompose(const Hamiltonian& h, SpectralOptions options = {});

// sigma_u(M).
struct EigenvalueSupport {
  VertexId vertex = 0;
  std::vector<std::size_t> indices;  // into SpectralDecomposition::eigenvalues()
  std::vector<double> eigenvalues;
  std::vector<double> weights;  // (E_j)_{u,u}

  std::size_t size() const noexcept { return indices.size(); }
  // Position of eigenvalue index j in this support, if present.
  std::optional<std::size_t> position(std::size_t j) const;
};

EigenvalueSupport support(const SpectralDecomposition& d, VertexId u);

bool are_cospectral(const SpectralDecomposition& d, VertexId u, VertexId v,
                    double tol = 1e-9);

struct StrongCospectralResult {
  bool strongly_cospectral = false;
  std::vector<std::size_t> plus;   // E_j e_u = E_j e_v != 0
  std::vector<std::size_t> minus;  // E_j e_u = -E_j e_v != 0
  std::optional<std::size_t> witness;  // first index violating both signs
};

// Throws InvalidInput when u == v.
StrongCospectralResult strong_cospectral(const SpectralDecomposition& d, VertexId u,
                                         VertexId v, double tol = 1e-9);

// A maximal set T(omega, eta) of pairwise twins with e_u - e_v eigenvalue theta.
struct TwinSet {
  std::vector<VertexId> vertices;
  double omega = 0.0;
  double eta = 0.0;
  double theta = 0.0;

  bool contains(VertexId u) const;
};

// theta = eigenvalue of e_u - e_v for twins u, v with loop weight omega and
// mutual weight eta.
double twin_theta(const WeightedGraph& g, MatrixKind kind, VertexId u, double omega,
                  double eta);

// Exact combinatorial comparison of weighted neighbourhoods. Classes are
// disjoint, assigned largest first; singletons are omitted.
std::vector<TwinSet> find_twin_sets(const WeightedGraph& g, MatrixKind kind);

std::optional<TwinSet> twin_set_of(const std::vector<TwinSet>& sets, VertexId u);

bool verify_twin_eigenvector(const Eigen::MatrixXd& m, const TwinSet& t, double tol = 1e-9);
bool verify_twin_eigenvector(const SpectralDecomposition& d, const TwinSet& t,
                             double tol = 1e-9);

enum class PeriodicityMethod { IntegerSpectrum, RationalRescaled, Undetected };

std::string_view to_string(PeriodicityMethod m);

struct PeriodicityInfo {
  VertexId vertex = 0;
  bool periodic = false;
  double period = 0.0;
  PeriodicityMethod method = PeriodicityMethod::Undetected;
  // When periodic: lambda_max - lambda = unit * offsets[k] for the k-th
  // support eigenvalue (descending), offsets[0] = 0.
  double unit = 0.0;
  std::vector<long long> offsets;
};

struct PeriodicityOptions {
  double integer_tol = 1e-9;
  long long max_denominator = 1000000;
  double rational_tol = 1e-10;  // relative
  double verify_tol = 1e-8;
};

// Sound but incomplete: Undetected does not prove aperiodicity. A
// single-eigenvalue support is reported periodic with period 2 pi.
PeriodicityInfo periodicity(const SpectralDecomposition& d, VertexId u,
                            PeriodicityOptions options = {});

}  // namespace qwsed

#endif  // QWSED_SPECTRAL_HPP_
