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

#ifndef QWSED_WALK_HPP_
#define QWSED_WALK_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwsed/family.hpp"
#include "qwsed/matrices.hpp"
#include "qwsed/spectral.hpp"

namespace qwsed {

using Complex = std::complex<double>;

// U(t) = sum_j exp(i t lambda_j) E_j. Holds a reference to the decomposition.
class WalkEvaluator {
 public:
  explicit WalkEvaluator(const SpectralDecomposition& d) : d_(&d) {}

  const SpectralDecomposition& decomposition() const noexcept { return *d_; }

  Complex entry(double t, VertexId u, VertexId v) const;
  // U(t) e_u.
  Eigen::VectorXcd column(double t, VertexId u) const;
  Eigen::MatrixXcd matrix(double t) const;

 private:
  const SpectralDecomposition* d_;
};

Complex transition_entry(const WalkEvaluator& w, double t, VertexId u, VertexId v);

// U(t)_{u,u} restricted to the eigenvalue support of u.
class DiagonalSeries {
 public:
  explicit DiagonalSeries(EigenvalueSupport s) : s_(std::move(s)) {}
  DiagonalSeries(const SpectralDecomposition& d, VertexId u) : s_(qwsed::support(d, u)) {}

  const EigenvalueSupport& support() const noexcept { return s_; }
  Complex value(double t) const;
  double magnitude(double t) const { return std::abs(value(t)); }
  double squared(double t) const { return std::norm(value(t)); }
  // max - min support eigenvalue.
  double spread() const;

 private:
  EigenvalueSupport s_;
};

std::vector<double> diagonal_magnitude_series(const WalkEvaluator& w, VertexId u,
                                              const std::vector<double>& t_grid);
std::vector<Complex> entry_series(const WalkEvaluator& w, VertexId u, VertexId v,
                                  const std::vector<double>& t_grid);

// ---------------------------------------------------------------------------
// Global minimization of a nonnegative smooth function on [0, T].

struct SampledMinimum {
  double value = 0.0;  // f(argmin)
  double argmin = 0.0;
  std::size_t grid = 0;
  std::size_t refinements = 0;
  // Every refined local minimum (t, f(t)) in increasing t.
  std::vector<std::pair<double, double>> local_minima;
};

// Uniform grid of n + 1 points on [0, window]; every local minimum bracket is
// refined by golden-section search to refine_tol. Grid values are computed in
// parallel and reduced in index order, so the result does not depend on the
// worker count. Ties go to the smaller t.
SampledMinimum minimize_sampled(const std::function<double(double)>& f, double window,
                                std::size_t n, double refine_tol);

struct MinimizeOptions {
  std::optional<double> window;  // explicit [0, T]
  std::size_t grid = 4096;
  std::size_t max_grid = std::size_t{1} << 22;
  double refine_tol = 1e-10;
  double attain_tol = 1e-8;
};

struct MinimizationResult {
  VertexId vertex = 0;
  double window = 0.0;
  std::size_t grid = 0;
  double minimum = 1.0;  // m*
  double argmin = 0.0;   // t*
  std::size_t refinements = 0;
  bool certified = false;  // window covers a verified period
  std::optional<double> period;
  // Refined local minima within attain_tol of m*, increasing.
  std::vector<double> attainment_times;
  // Every refined local minimum (t, |U(t)_{u,u}|), increasing in t.
  std::vector<std::pair<double, double>> local_minima;
};

// Grid size used for a window of length T over a support of the given spread.
std::size_t grid_size(double window, double spread, const MinimizeOptions& options);

// Without an explicit window the vertex must have a detected period, else
// InvalidInput. An explicit window is certified when it covers the period.
MinimizationResult minimize_diagonal(const WalkEvaluator& w, VertexId u,
                                     const MinimizeOptions& options = {});

struct PstWitness {
  VertexId target = 0;
  double time = 0.0;
  double magnitude = 0.0;
};

// Searches [0, window] for |U(t)_{u,v}| > 1 - threshold with v != u.
std::optional<PstWitness> detect_pst(const WalkEvaluator& w, VertexId u, double window,
                                     const MinimizeOptions& options = {},
                                     double threshold = 1e-8);

// PST check at given candidate times (typically local minima of |U(t)_{u,u}|
// below 1e-2). Returns the earliest hit.
std::optional<PstWitness> pst_at_times(const WalkEvaluator& w, VertexId u,
                                       const std::vector<double>& times,
                                       double threshold = 1e-8);

// Every |U(t)_{u,v}| equals 1/sqrt(n) within tol.
bool check_uniform_mixing(const WalkEvaluator& w, VertexId u, double t, double tol = 1e-8);
// Every entry of U(t) has magnitude 1/sqrt(n) within tol.
bool check_uniform_mixing_all(const WalkEvaluator& w, double t, double tol = 1e-8);

struct FractionalRevival {
  double alpha = 0.0;  // |U(t)_{u,u}|
  double beta = 0.0;   // |U(t)_{u,v}|
  bool proper = false;  // alpha^2 + beta^2 = 1 within tol and beta > tol
};

FractionalRevival check_fractional_revival(const WalkEvaluator& w, VertexId u, VertexId v,
                                           double t, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Closed forms for U(t)_{u,u}.
//
// Catalogue:
//   complete, adjacency, any vertex
//   kjoin (K_m v X), laplacian, clique vertex
//   ojoin (O_m v X) and disconnected doublecone, laplacian, independent/apex vertex
//   ojoin m=2 and disconnected doublecone over d-regular X, adjacency, apex
//   cone over d-regular X, adjacency, apex
//   star, adjacency, centre or leaf; star, laplacian, centre
//   doublestar k = l, adjacency, internal or leaf
// Throws Unsupported otherwise.
std::function<Complex(double)> closed_form(const FamilySpec& spec, MatrixKind kind,
                                           VertexRole role);

bool has_closed_form(const FamilySpec& spec, MatrixKind kind, VertexRole role);

}  // namespace qwsed

#endif  // QWSED_WALK_HPP_
