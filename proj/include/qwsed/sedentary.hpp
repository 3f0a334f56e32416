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

#ifndef QWSED_SEDENTARY_HPP_
#define QWSED_SEDENTARY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwsed/error.hpp"
#include "qwsed/family.hpp"
#include "qwsed/graph.hpp"
#include "qwsed/lattice.hpp"
#include "qwsed/matrices.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/walk.hpp"

namespace qwsed {

enum class CertificateKind {
  TwinBound,
  SubsetBound,
  ProductComposition,
  ClosedFormFamily,
  NotSedentaryPST,
  NotSedentaryZeroCrossing,
  SharpnessParity,
};

std::string_view to_string(CertificateKind kind);

struct SedentaryCertificate {
  CertificateKind kind = CertificateKind::SubsetBound;
  std::vector<std::size_t> subset;  // eigenvalue indices
  std::vector<double> subset_eigenvalues;
  double a = 0.0;
  double bound = 0.0;  // C
  bool analytic = true;
  // False for informational certificates (|T| = 2 twins, refutations).
  bool claims_sedentary = true;
  std::vector<double> equality_times;
  std::string note;
};

enum class Classification {
  NotSedentary,
  SedentaryAtLeast,
  SharplySedentary,
  TightlySedentary,
  Unresolved,
};

std::string_view to_string(Classification c);

struct SedentaryReport {
  std::string graph;
  std::size_t graph_order = 0;
  MatrixKind kind;
  VertexId vertex = 0;
  Classification classification = Classification::Unresolved;
  double C = 0.0;
  std::optional<double> tight_time;
  std::vector<SedentaryCertificate> certificates;
  std::optional<MinimizationResult> oracle;
  std::optional<PeriodicityInfo> periodicity;
  std::optional<PstWitness> pst;
  bool pst_proof = false;
  std::vector<std::string> warnings;
};

// Raised by subset_bound when a = sum_{j in S} (E_j)_{u,u} does not exceed 1/2.
class CertificateRefused : public Error {
 public:
  explicit CertificateRefused(double a);
  double a() const noexcept { return a_; }

 private:
  double a_;
};

struct SubsetBoundOptions {
  std::optional<double> window;  // default: period of u, else 200 pi
  MinimizeOptions minimize;
};

// |S| = 1: C = 2a - 1. |S| >= 2: C = inf_grid F(t) - (1 - a) with
// F(t) = |sum_{j in S} e^{i t lambda_j} (E_j)_{u,u}|, flagged non-analytic.
// S must be a nonempty proper subset of the support of u.
SedentaryCertificate subset_bound(const SpectralDecomposition& d, VertexId u,
                                  const std::vector<std::size_t>& subset,
                                  const SubsetBoundOptions& options = {});

struct EqualityCheck {
  bool phases = false;         // e^{i t1 (l1 - lj)} = 1 on S, -1 off S
  bool functional = false;     // |sum_S e^{i t1 lj} (E_j)_{u,u}| >= 1 - a
  bool holds = false;          // both, and |U(t1)_{u,u}| = 2a - 1
  double magnitude = 0.0;      // |U(t1)_{u,u}|
};

EqualityCheck equality_condition(const SpectralDecomposition& d, VertexId u,
                                 const std::vector<std::size_t>& subset, double t1,
                                 double tol = 1e-8);

// Smallest t1 > 0 with e^{i t1 (l1 - lj)} = 1 on S and -1 off S, for a
// periodic vertex with integer offsets. subset_positions index the support.
std::optional<double> subset_equality_time(const PeriodicityInfo& p,
                                           const std::vector<std::size_t>& subset_positions);

SedentaryCertificate twin_bound(const SpectralDecomposition& d, const TwinSet& t, VertexId u);

// Lattice parity test. coordinates is r x b: the k-th support eigenvalue
// written in a Q-basis of the span of the support (a single column of
// integer offsets for rescaled-integer spectra). True when every integer
// relation sum m_k lambda_k = 0 with sum m_k = 0 has sum_{k in S} m_k even.
bool sharpness_parity_coordinates(const IntMatrix& coordinates,
                                  const std::vector<std::size_t>& subset_positions);
// Throws Unsupported when the support is not rescaled-integer.
bool sharpness_parity(const SpectralDecomposition& d, VertexId u,
                      const std::vector<std::size_t>& subset);

struct ProductComposeOptions {
  double time_tol = 1e-6;
  long long max_period_multiple = 10000;
};

// Cartesian product of the factor walks. All reports must share one
// Kronecker-compatible matrix kind.
SedentaryReport product_compose(const std::vector<SedentaryReport>& factors,
                                const ProductComposeOptions& options = {});

struct ProductFactor {
  WeightedGraph graph;
  std::optional<FamilySpec> family;
  std::string name;
};

struct ClassifyOptions {
  SpectralOptions spectral;
  MinimizeOptions minimize;  // minimize.window overrides the search window
  double uncertified_window = 200.0 * 3.14159265358979323846;
  bool exhaustive_subsets = false;
  std::size_t exhaustive_cap = 20;
  std::optional<FamilySpec> family;
  std::vector<ProductFactor> factors;  // explicit Cartesian factors
  std::string graph_name;
};

SedentaryReport classify(const WeightedGraph& g, MatrixKind kind, VertexId u,
                         const ClassifyOptions& options = {});
// Reuses a decomposition of assemble(g, d.kind()).
SedentaryReport classify(const WeightedGraph& g, const SpectralDecomposition& d, VertexId u,
                         const ClassifyOptions& options = {});

// Exact classification from the named-family results. Throws Unsupported
// outside the catalogue.
SedentaryReport family_closed_classification(const FamilySpec& spec, MatrixKind kind,
                                             VertexId u);

}  // namespace qwsed

#endif  // QWSED_SEDENTARY_HPP_
