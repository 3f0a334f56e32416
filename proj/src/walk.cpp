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

#include "qwsed/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "qwsed/error.hpp"
#include "qwsed/parallel.hpp"

namespace qwsed {

std::size_t worker_count() {
  if (const char* env = std::getenv("QWSED_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// WalkEvaluator

Complex WalkEvaluator::entry(double t, VertexId u, VertexId v) const {
  Complex z = 0.0;
  for (std::size_t j = 0; j < d_->size(); ++j) {
    const double e = d_->projector_entry(j, u, v);
    if (e != 0.0) z += e * std::polar(1.0, t * d_->eigenvalues()[j]);
  }
  return z;
}

Eigen::VectorXcd WalkEvaluator::column(double t, VertexId u) const {
  const auto n = static_cast<Eigen::Index>(d_->order());
  Eigen::VectorXcd col = Eigen::VectorXcd::Zero(n);
  for (std::size_t j = 0; j < d_->size(); ++j) {
    const Complex phase = std::polar(1.0, t * d_->eigenvalues()[j]);
    col += phase * d_->projector_column(j, u).cast<Complex>();
  }
  return col;
}

Eigen::MatrixXcd WalkEvaluator::matrix(double t) const {
  const auto n = static_cast<Eigen::Index>(d_->order());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t j = 0; j < d_->size(); ++j) {
    const Complex phase = std::polar(1.0, t * d_->eigenvalues()[j]);
    u += phase * d_->projector(j).cast<Complex>();
  }
  return u;
}

Complex transition_entry(const WalkEvaluator& w, double t, VertexId u, VertexId v) {
  return w.entry(t, u, v);
}

Complex DiagonalSeries::value(double t) const {
  Complex z = 0.0;
  for (std::size_t k = 0; k < s_.size(); ++k) {
    z += s_.weights[k] * std::polar(1.0, t * s_.eigenvalues[k]);
  }
  return z;
}

double DiagonalSeries::spread() const {
  if (s_.eigenvalues.empty()) return 0.0;
  return s_.eigenvalues.front() - s_.eigenvalues.back();
}

std::vector<double> diagonal_magnitude_series(const WalkEvaluator& w, VertexId u,
                                              const std::vector<double>& t_grid) {
  const DiagonalSeries series(w.decomposition(), u);
  std::vector<double> out(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) { out[i] = series.magnitude(t_grid[i]); });
  return out;
}

std::vector<Complex> entry_series(const WalkEvaluator& w, VertexId u, VertexId v,
                                  const std::vector<double>& t_grid) {
  std::vector<Complex> out(t_grid.size());
  if (u == v) {
    const DiagonalSeries series(w.decomposition(), u);
    parallel_for(t_grid.size(), [&](std::size_t i) { out[i] = series.value(t_grid[i]); });
  } else {
    parallel_for(t_grid.size(), [&](std::size_t i) { out[i] = w.entry(t_grid[i], u, v); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

struct Refined {
  double t = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
};

Refined golden_section(const std::function<double(double)>& f, double a, double b,
                       double tol, double t_seed, double f_seed) {
  constexpr double kInvPhi = 0.6180339887498949;
  Refined best{t_seed, f_seed, 0};
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  auto keep = [&best](double t, double v) {
    if (v < best.value || (v == best.value && t < best.t)) {
      best.t = t;
      best.value = v;
    }
  };
  keep(c, fc);
  keep(d, fd);
  std::size_t it = 0;
  while (b - a > tol && it < 200) {
    ++it;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      keep(d, fd);
    }
  }
  best.iterations = it;
  return best;
}

}  // namespace

SampledMinimum minimize_sampled(const std::function<double(double)>& f, double window,
                                std::size_t n, double refine_tol) {
  if (!(window > 0.0) || !std::isfinite(window)) {
    throw InvalidInput("minimization window must be a positive finite number");
  }
  n = std::max<std::size_t>(n, 2);
  auto grid_t = [&](std::size_t i) {
    return i == n ? window : window * static_cast<double>(i) / static_cast<double>(n);
  };
  std::vector<double> values(n + 1);
  parallel_for(n + 1, [&](std::size_t i) { values[i] = f(grid_t(i)); });

  std::size_t grid_best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (values[i] < values[grid_best]) grid_best = i;
  }
  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i <= n; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i == n || values[i] <= values[i + 1];
    const bool strict = (i > 0 && values[i] < values[i - 1]) || (i < n && values[i] < values[i + 1]);
    if ((left_ok && right_ok && strict) || i == grid_best) brackets.push_back(i);
  }

  std::vector<Refined> refined(brackets.size());
  parallel_for(
      brackets.size(),
      [&](std::size_t k) {
        const std::size_t i = brackets[k];
        const double a = i == 0 ? 0.0 : grid_t(i - 1);
        const double b = i == n ? window : grid_t(i + 1);
        refined[k] = golden_section(f, a, b, refine_tol, grid_t(i), values[i]);
      },
      16);

  SampledMinimum out;
  out.grid = n;
  out.value = std::numeric_limits<double>::infinity();
  for (const Refined& r : refined) {
    out.refinements += r.iterations;
    out.local_minima.emplace_back(r.t, r.value);
    if (r.value < out.value) out.value = r.value;
  }
  std::sort(out.local_minima.begin(), out.local_minima.end());
  out.local_minima.erase(
      std::unique(out.local_minima.begin(), out.local_minima.end(),
                  [](const auto& a, const auto& b) { return a.first == b.first; }),
      out.local_minima.end());
  // Ties (within rounding of the objective) go to the smaller t.
  const double tie = out.value + 1e-13;
  for (const auto& [t, v] : out.local_minima) {
    if (v <= tie) {
      out.argmin = t;
      out.value = v;
      break;
    }
  }
  return out;
}

std::size_t grid_size(double window, double spread, const MinimizeOptions& options) {
  const double scaled = std::ceil(64.0 * window * spread / (2.0 * std::numbers::pi));
  std::size_t n = options.grid;
  if (scaled > static_cast<double>(n)) {
    n = scaled >= static_cast<double>(options.max_grid) ? options.max_grid
                                                       : static_cast<std::size_t>(scaled);
  }
  return std::min(n, options.max_grid);
}

MinimizationResult minimize_diagonal(const WalkEvaluator& w, VertexId u,
                                     const MinimizeOptions& options) {
  const SpectralDecomposition& d = w.decomposition();
  const PeriodicityInfo p = periodicity(d, u);
  MinimizationResult r;
  r.vertex = u;
  if (p.periodic) r.period = p.period;
  if (options.window) {
    r.window = *options.window;
    r.certified = p.periodic && r.window >= p.period * (1.0 - 1e-12);
  } else if (p.periodic) {
    r.window = p.period;
    r.certified = true;
  } else {
    throw InvalidInput("vertex " + std::to_string(u) +
                       " has no detected period; pass an explicit window (--window T)");
  }

  const DiagonalSeries series(d, u);
  const std::size_t n = grid_size(r.window, series.spread(), options);
  const SampledMinimum m = minimize_sampled(
      [&series](double t) { return series.squared(t); }, r.window, n, options.refine_tol);
  r.grid = m.grid;
  r.refinements = m.refinements;
  r.minimum = std::sqrt(std::max(0.0, m.value));
  r.argmin = m.argmin;
  for (const auto& [t, v] : m.local_minima) {
    const double mag = std::sqrt(std::max(0.0, v));
    r.local_minima.emplace_back(t, mag);
    if (mag <= r.minimum + options.attain_tol) r.attainment_times.push_back(t);
  }
  return r;
}

std::optional<PstWitness> pst_at_times(const WalkEvaluator& w, VertexId u,
                                       const std::vector<double>& times, double threshold) {
  for (double t : times) {
    const Eigen::VectorXcd col = w.column(t, u);
    for (Eigen::Index v = 0; v < col.size(); ++v) {
      if (static_cast<VertexId>(v) == u) continue;
      const double mag = std::abs(col(v));
      if (mag > 1.0 - threshold) return PstWitness{static_cast<VertexId>(v), t, mag};
    }
  }
  return std::nullopt;
}

std::optional<PstWitness> detect_pst(const WalkEvaluator& w, VertexId u, double window,
                                     const MinimizeOptions& options, double threshold) {
  MinimizeOptions o = options;
  o.window = window;
  const MinimizationResult m = minimize_diagonal(w, u, o);
  std::vector<double> times;
  for (const auto& [t, mag] : m.local_minima) {
    if (mag <= 1e-2) times.push_back(t);
  }
  return pst_at_times(w, u, times, threshold);
}

bool check_uniform_mixing(const WalkEvaluator& w, VertexId u, double t, double tol) {
  const Eigen::VectorXcd col = w.column(t, u);
  const double target = 1.0 / std::sqrt(static_cast<double>(col.size()));
  for (Eigen::Index v = 0; v < col.size(); ++v) {
    if (std::abs(std::abs(col(v)) - target) > tol) return false;
  }
  return true;
}

bool check_uniform_mixing_all(const WalkEvaluator& w, double t, double tol) {
  const Eigen::MatrixXcd m = w.matrix(t);
  const double target = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  return ((m.cwiseAbs().array() - target).abs() <= tol).all();
}

FractionalRevival check_fractional_revival(const WalkEvaluator& w, VertexId u, VertexId v,
                                           double t, double tol) {
  FractionalRevival fr;
  fr.alpha = std::abs(w.entry(t, u, u));
  fr.beta = std::abs(w.entry(t, u, v));
  fr.proper = u != v && std::abs(fr.alpha * fr.alpha + fr.beta * fr.beta - 1.0) <= tol &&
              fr.beta > tol;
  return fr;
}

}  // namespace qwsed
