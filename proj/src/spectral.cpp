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

#include "qwsed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <tuple>

#include "qwsed/error.hpp"
#include "qwsed/rational.hpp"

namespace qwsed {

// ---------------------------------------------------------------------------
// SpectralDecomposition

Eigen::MatrixXd SpectralDecomposition::projector(std::size_t j) const {
  const Eigen::MatrixXd& v = block(j);
  return v * v.transpose();
}

double SpectralDecomposition::projector_entry(std::size_t j, VertexId u, VertexId v) const {
  const Eigen::MatrixXd& b = block(j);
  return b.row(static_cast<Eigen::Index>(u)).dot(b.row(static_cast<Eigen::Index>(v)));
}

Eigen::VectorXd SpectralDecomposition::projector_column(std::size_t j, VertexId u) const {
  const Eigen::MatrixXd& b = block(j);
  return b * b.row(static_cast<Eigen::Index>(u)).transpose();
}

double SpectralDecomposition::projection_norm(std::size_t j, VertexId u) const {
  return block(j).row(static_cast<Eigen::Index>(u)).norm();
}

double SpectralDecomposition::completeness_error() const {
  const auto n = matrix_.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < size(); ++j) sum += projector(j);
  return (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

double SpectralDecomposition::projector_algebra_error() const {
  double worst = 0.0;
  std::vector<Eigen::MatrixXd> e;
  e.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) e.push_back(projector(j));
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t k = j; k < size(); ++k) {
      Eigen::MatrixXd prod = e[j] * e[k];
      if (j == k) prod -= e[j];
      worst = std::max(worst, prod.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double SpectralDecomposition::reconstruction_error() const {
  const auto n = matrix_.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < size(); ++j) sum += eigenvalues_[j] * projector(j);
  return (sum - matrix_).norm() / std::max(1.0, matrix_.norm());
}

SpectralDecomposition decompose(const Hamiltonian& h, SpectralOptions options) {
  if (h.matrix.rows() != h.matrix.cols()) throw InvalidInput("Hamiltonian is not square");
  SpectralDecomposition d;
  d.matrix_ = h.matrix;
  d.kind_ = h.kind;
  d.options_ = options;
  const auto n = h.matrix.rows();
  if (n == 0) return d;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  d.norm_ = std::max(std::abs(values(0)), std::abs(values(n - 1)));
  const double gap = options.cluster_tol * std::max(1.0, d.norm_);

  Eigen::Index hi = n - 1;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0 && values(lo) - values(lo - 1) <= gap) --lo;
    const Eigen::Index count = hi - lo + 1;
    double mean = 0.0;
    for (Eigen::Index k = lo; k <= hi; ++k) mean += values(k);
    d.eigenvalues_.push_back(mean / static_cast<double>(count));
    d.multiplicities_.push_back(static_cast<std::size_t>(count));
    Eigen::MatrixXd block(n, count);
    // Columns in descending eigenvalue order within the cluster.
    for (Eigen::Index k = 0; k < count; ++k) block.col(k) = vectors.col(hi - k);
    d.blocks_.push_back(std::move(block));
    hi = lo - 1;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Supports and cospectrality

std::optional<std::size_t> EigenvalueSupport::position(std::size_t j) const {
  const auto it = std::find(indices.begin(), indices.end(), j);
  if (it == indices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - indices.begin());
}

EigenvalueSupport support(const SpectralDecomposition& d, VertexId u) {
  if (u >= d.order()) throw InvalidInput("vertex " + std::to_string(u) + " out of range");
  EigenvalueSupport s;
  s.vertex = u;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double norm = d.projection_norm(j, u);
    if (norm > d.options().support_tol) {
      s.indices.push_back(j);
      s.eigenvalues.push_back(d.eigenvalues()[j]);
      s.weights.push_back(norm * norm);
    }
  }
  return s;
}

bool are_cospectral(const SpectralDecomposition& d, VertexId u, VertexId v, double tol) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (std::abs(d.projector_entry(j, u, u) - d.projector_entry(j, v, v)) > tol) return false;
  }
  return true;
}

StrongCospectralResult strong_cospectral(const SpectralDecomposition& d, VertexId u,
                                         VertexId v, double tol) {
  if (u == v) throw InvalidInput("strong cospectrality needs two distinct vertices");
  if (u >= d.order() || v >= d.order()) throw InvalidInput("vertex out of range");
  StrongCospectralResult r;
  const double support_tol = d.options().support_tol;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const Eigen::MatrixXd& b = d.block(j);
    const Eigen::VectorXd pu = b.row(static_cast<Eigen::Index>(u)).transpose();
    const Eigen::VectorXd pv = b.row(static_cast<Eigen::Index>(v)).transpose();
    if (pu.norm() <= support_tol && pv.norm() <= support_tol) continue;
    // ||E_j e_u -/+ E_j e_v|| = ||V_j^T e_u -/+ V_j^T e_v|| for orthonormal V_j.
    if ((pu - pv).norm() <= tol) {
      r.plus.push_back(j);
    } else if ((pu + pv).norm() <= tol) {
      r.minus.push_back(j);
    } else {
      r.witness = j;
      r.plus.clear();
      r.minus.clear();
      return r;
    }
  }
  r.strongly_cospectral = true;
  return r;
}

// ---------------------------------------------------------------------------
// Twins

bool TwinSet::contains(VertexId u) const {
  return std::find(vertices.begin(), vertices.end(), u) != vertices.end();
}

double twin_theta(const WeightedGraph& g, MatrixKind kind, VertexId u, double omega,
                  double eta) {
  const double deg = g.degree(u);
  switch (kind.type) {
    case MatrixKind::Type::Adjacency:
      return omega - eta;
    case MatrixKind::Type::GeneralizedAdjacency:
      return kind.alpha * deg + omega - eta;
    case MatrixKind::Type::Laplacian:
      return deg - omega + eta;
    case MatrixKind::Type::NormalizedAdjacency:
      return deg == 0.0 ? 0.0 : (omega - eta) / deg;
    case MatrixKind::Type::NormalizedLaplacian:
      return deg == 0.0 ? 1.0 : 1.0 - (omega - eta) / deg;
  }
  return 0.0;
}

namespace {

using RowKey = std::vector<std::pair<VertexId, double>>;

struct Candidate {
  std::vector<VertexId> members;
  double omega = 0.0;
  double eta = 0.0;
};

}  // namespace

std::vector<TwinSet> find_twin_sets(const WeightedGraph& g, MatrixKind kind) {
  const std::size_t n = g.order();
  // (loop, eta, row) -> vertices. eta = 0 keys use the open row without u;
  // eta != 0 keys use the row with u's own entry set to eta.
  std::map<std::tuple<double, double, RowKey>, std::vector<VertexId>> groups;
  for (VertexId u = 0; u < n; ++u) {
    const auto& row = g.row(u);
    const double loop = g.loop_weight(u);
    RowKey open;
    for (const auto& [v, w] : row) {
      if (v != u) open.emplace_back(v, w);
    }
    groups[{loop, 0.0, open}].push_back(u);

    std::vector<double> etas;
    for (const auto& [v, w] : open) etas.push_back(w);
    std::sort(etas.begin(), etas.end());
    etas.erase(std::unique(etas.begin(), etas.end()), etas.end());
    for (double eta : etas) {
      RowKey closed = open;
      closed.emplace_back(u, eta);
      std::sort(closed.begin(), closed.end());
      groups[{loop, eta, closed}].push_back(u);
    }
  }

  std::vector<Candidate> candidates;
  for (auto& [key, members] : groups) {
    if (members.size() >= 2) {
      candidates.push_back({members, std::get<0>(key), std::get<1>(key)});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.members.size() != b.members.size()) {
                       return a.members.size() > b.members.size();
                     }
                     return a.members.front() < b.members.front();
                   });

  std::vector<bool> taken(n, false);
  std::vector<TwinSet> out;
  for (const Candidate& c : candidates) {
    std::vector<VertexId> free;
    for (VertexId u : c.members) {
      if (!taken[u]) free.push_back(u);
    }
    if (free.size() < 2) continue;
    for (VertexId u : free) taken[u] = true;
    TwinSet t;
    t.vertices = std::move(free);
    t.omega = c.omega;
    t.eta = c.eta;
    t.theta = twin_theta(g, kind, t.vertices.front(), c.omega, c.eta);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const TwinSet& a, const TwinSet& b) {
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

std::optional<TwinSet> twin_set_of(const std::vector<TwinSet>& sets, VertexId u) {
  for (const TwinSet& t : sets) {
    if (t.contains(u)) return t;
  }
  return std::nullopt;
}

bool verify_twin_eigenvector(const Eigen::MatrixXd& m, const TwinSet& t, double tol) {
  const auto n = m.rows();
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    for (std::size_t k = i + 1; k < t.vertices.size(); ++k) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      x(static_cast<Eigen::Index>(t.vertices[i])) = 1.0;
      x(static_cast<Eigen::Index>(t.vertices[k])) = -1.0;
      if ((m * x - t.theta * x).norm() > tol) return false;
    }
  }
  return true;
}

bool verify_twin_eigenvector(const SpectralDecomposition& d, const TwinSet& t, double tol) {
  return verify_twin_eigenvector(d.matrix(), t, tol);
}

// ---------------------------------------------------------------------------
// Periodicity

std::string_view to_string(PeriodicityMethod m) {
  switch (m) {
    case PeriodicityMethod::IntegerSpectrum:
      return "integer-spectrum";
    case PeriodicityMethod::RationalRescaled:
      return "rational-rescaled";
    case PeriodicityMethod::Undetected:
      return "undetected";
  }
  return "undetected";
}

namespace {

double diagonal_magnitude(const EigenvalueSupport& s, double t) {
  std::complex<double> z = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    z += s.weights[k] * std::polar(1.0, t * s.eigenvalues[k]);
  }
  return std::abs(z);
}

}  // namespace

PeriodicityInfo periodicity(const SpectralDecomposition& d, VertexId u,
                            PeriodicityOptions options) {
  const EigenvalueSupport s = support(d, u);
  PeriodicityInfo info;
  info.vertex = u;
  const std::size_t r = s.size();
  if (r == 0) return info;
  if (r == 1) {
    info.periodic = true;
    info.period = 2.0 * std::numbers::pi;
    info.method = PeriodicityMethod::IntegerSpectrum;
    info.unit = 1.0;
    info.offsets = {0};
    return info;
  }

  std::vector<long long> offsets(r, 0);
  double unit = 0.0;
  PeriodicityMethod method = PeriodicityMethod::Undetected;

  std::vector<long long> ints;
  for (double lambda : s.eigenvalues) {
    const auto k = as_integer(lambda, options.integer_tol);
    if (!k) break;
    ints.push_back(*k);
  }
  if (ints.size() == r) {
    for (std::size_t k = 0; k < r; ++k) offsets[k] = ints[0] - ints[k];
    unit = 1.0;
    method = PeriodicityMethod::IntegerSpectrum;
  } else {
    const double top = s.eigenvalues.front();
    const double delta = top - s.eigenvalues[1];
    std::vector<Rational> ratios;
    long long q_all = 1;
    bool ok = delta > 0.0;
    for (std::size_t k = 0; ok && k < r; ++k) {
      const double ratio = (top - s.eigenvalues[k]) / delta;
      const auto approx = rational_approximation(
          ratio, options.max_denominator, options.rational_tol * std::max(1.0, std::abs(ratio)));
      if (!approx) {
        ok = false;
        break;
      }
      const double err = std::abs(ratio - approx->value());
      const double q = static_cast<double>(approx->den);
      if (q * q * err > 1e-3) {
        ok = false;
        break;
      }
      const auto l = bounded_lcm(q_all, approx->den, options.max_denominator);
      if (!l) {
        ok = false;
        break;
      }
      q_all = *l;
      ratios.push_back(*approx);
    }
    if (ok) {
      for (std::size_t k = 0; k < r; ++k) {
        offsets[k] = ratios[k].num * (q_all / ratios[k].den);
      }
      unit = delta / static_cast<double>(q_all);
      method = PeriodicityMethod::RationalRescaled;
    }
  }
  if (method == PeriodicityMethod::Undetected) return info;

  long long g = 0;
  for (long long o : offsets) g = std::gcd(g, o);
  if (g <= 0) return info;
  const double period = 2.0 * std::numbers::pi / (unit * static_cast<double>(g));
  if (std::abs(1.0 - diagonal_magnitude(s, period)) > options.verify_tol) return info;

  info.periodic = true;
  info.period = period;
  info.method = method;
  info.unit = unit;
  info.offsets = std::move(offsets);
  return info;
}

}  // namespace qwsed
