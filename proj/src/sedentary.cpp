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

#include "qwsed/sedentary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qwsed/parallel.hpp"
#include "qwsed/rational.hpp"

namespace qwsed {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

std::vector<std::size_t> positions_in(const EigenvalueSupport& s,
                                      const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> pos;
  for (std::size_t j : subset) {
    const auto p = s.position(j);
    if (!p) {
      throw InvalidInput("eigenvalue index " + std::to_string(j) +
                         " is not in the support of vertex " + std::to_string(s.vertex));
    }
    pos.push_back(*p);
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  return pos;
}

double subset_weight(const EigenvalueSupport& s, const std::vector<std::size_t>& pos) {
  double a = 0.0;
  for (std::size_t p : pos) a += s.weights[p];
  return a;
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::TwinBound:
      return "twin-bound";
    case CertificateKind::SubsetBound:
      return "subset-bound";
    case CertificateKind::ProductComposition:
      return "product-composition";
    case CertificateKind::ClosedFormFamily:
      return "closed-form-family";
    case CertificateKind::NotSedentaryPST:
      return "not-sedentary-pst";
    case CertificateKind::NotSedentaryZeroCrossing:
      return "not-sedentary-zero-crossing";
    case CertificateKind::SharpnessParity:
      return "sharpness-parity";
  }
  return "unknown";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NotSedentary:
      return "not-sedentary";
    case Classification::SedentaryAtLeast:
      return "sedentary-at-least";
    case Classification::SharplySedentary:
      return "sharply-sedentary";
    case Classification::TightlySedentary:
      return "tightly-sedentary";
    case Classification::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

CertificateRefused::CertificateRefused(double a)
    : Error("subset weight a = " + fmt(a) + " does not exceed 1/2"), a_(a) {}

// ---------------------------------------------------------------------------
// Equality times and the subset bound

std::optional<double> subset_equality_time(const PeriodicityInfo& p,
                                           const std::vector<std::size_t>& subset_positions) {
  if (!p.periodic || p.offsets.empty() || subset_positions.empty()) return std::nullopt;
  const std::size_t r = p.offsets.size();
  std::vector<bool> in_s(r, false);
  for (std::size_t k : subset_positions) {
    if (k >= r) return std::nullopt;
    in_s[k] = true;
  }
  const long long base = p.offsets[subset_positions.front()];
  std::optional<int> e;
  for (std::size_t k = 0; k < r; ++k) {
    if (in_s[k]) continue;
    const int v = nu2(p.offsets[k] - base);
    if (e && *e != v) return std::nullopt;
    e = v;
  }
  if (!e) return std::nullopt;  // S is the whole support
  long long g = 0;
  for (std::size_t k = 0; k < r; ++k) {
    const long long diff = p.offsets[k] - base;
    if (in_s[k] && diff != 0 && nu2(diff) <= *e) return std::nullopt;
    g = std::gcd(g, diff < 0 ? -diff : diff);
  }
  if (g == 0) return std::nullopt;
  return kPi / (p.unit * static_cast<double>(g));
}

EqualityCheck equality_condition(const SpectralDecomposition& d, VertexId u,
                                 const std::vector<std::size_t>& subset, double t1, double tol) {
  const EigenvalueSupport s = support(d, u);
  const auto pos = positions_in(s, subset);
  EqualityCheck check;
  if (pos.empty()) return check;
  const double a = subset_weight(s, pos);
  const double l1 = s.eigenvalues[pos.front()];
  std::vector<bool> in_s(s.size(), false);
  for (std::size_t p : pos) in_s[p] = true;
  check.phases = true;
  Complex partial = 0.0;
  Complex full = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Complex ph = std::polar(1.0, t1 * (l1 - s.eigenvalues[k]));
    const Complex target = in_s[k] ? Complex(1.0) : Complex(-1.0);
    if (std::abs(ph - target) > tol) check.phases = false;
    const Complex term = s.weights[k] * std::polar(1.0, t1 * s.eigenvalues[k]);
    full += term;
    if (in_s[k]) partial += term;
  }
  check.magnitude = std::abs(full);
  check.functional = std::abs(partial) >= 1.0 - a - tol;
  check.holds = check.phases && check.functional &&
                std::abs(check.magnitude - (2.0 * a - 1.0)) <= tol;
  return check;
}

SedentaryCertificate subset_bound(const SpectralDecomposition& d, VertexId u,
                                  const std::vector<std::size_t>& subset,
                                  const SubsetBoundOptions& options) {
  const EigenvalueSupport s = support(d, u);
  const auto pos = positions_in(s, subset);
  if (pos.empty()) throw InvalidInput("subset must be nonempty");
  if (pos.size() == s.size()) throw InvalidInput("subset must be a proper subset of the support");
  const double a = subset_weight(s, pos);
  if (a <= 0.5 + 1e-12) throw CertificateRefused(a);

  SedentaryCertificate cert;
  cert.kind = CertificateKind::SubsetBound;
  for (std::size_t p : pos) {
    cert.subset.push_back(s.indices[p]);
    cert.subset_eigenvalues.push_back(s.eigenvalues[p]);
  }
  cert.a = a;
  const PeriodicityInfo per = periodicity(d, u);
  if (pos.size() == 1) {
    cert.bound = 2.0 * a - 1.0;
    cert.analytic = true;
  } else {
    EigenvalueSupport restricted;
    restricted.vertex = u;
    for (std::size_t p : pos) {
      restricted.indices.push_back(s.indices[p]);
      restricted.eigenvalues.push_back(s.eigenvalues[p]);
      restricted.weights.push_back(s.weights[p]);
    }
    const DiagonalSeries f(restricted);
    const double window = options.window ? *options.window
                                         : (per.periodic ? per.period : 200.0 * kPi);
    const std::size_t n = grid_size(window, f.spread(), options.minimize);
    const SampledMinimum m = minimize_sampled([&f](double t) { return f.squared(t); }, window, n,
                                              options.minimize.refine_tol);
    double c = std::sqrt(std::max(0.0, m.value)) - (1.0 - a);
    if (std::abs(c) < 1e-9) c = 0.0;
    cert.bound = std::max(0.0, c);
    cert.analytic = false;
    cert.note = "inf of the partial sum on a grid over [0, " + fmt(window) + "]";
  }
  if (const auto t1 = subset_equality_time(per, pos)) {
    if (equality_condition(d, u, cert.subset, *t1).holds) cert.equality_times.push_back(*t1);
  }
  return cert;
}

SedentaryCertificate twin_bound(const SpectralDecomposition& d, const TwinSet& t, VertexId u) {
  if (!t.contains(u)) throw InvalidInput("vertex is not in the twin set");
  if (t.vertices.size() < 2) throw InvalidInput("twin sets have at least two vertices");
  const EigenvalueSupport s = support(d, u);
  const double size = static_cast<double>(t.vertices.size());
  SedentaryCertificate cert;
  cert.kind = CertificateKind::TwinBound;
  cert.claims_sedentary = t.vertices.size() >= 3;
  cert.bound = cert.claims_sedentary ? 1.0 - 2.0 / size : 0.0;
  cert.note = "twin class of size " + std::to_string(t.vertices.size()) + ", theta = " +
              fmt(t.theta);
  if (!cert.claims_sedentary) cert.note += "; informational only";

  const double tol = 1e-7 * std::max(1.0, d.norm());
  std::optional<std::size_t> theta_pos;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (std::abs(s.eigenvalues[k] - t.theta) <= tol) theta_pos = k;
  }
  if (theta_pos) {
    cert.subset = {s.indices[*theta_pos]};
    cert.subset_eigenvalues = {s.eigenvalues[*theta_pos]};
    cert.a = s.weights[*theta_pos];
    if (cert.claims_sedentary && std::abs(cert.a - (1.0 - 1.0 / size)) <= 1e-9) {
      const PeriodicityInfo per = periodicity(d, u);
      if (const auto t1 = subset_equality_time(per, {*theta_pos})) {
        if (equality_condition(d, u, cert.subset, *t1).holds) cert.equality_times.push_back(*t1);
      }
    }
  } else {
    cert.note += "; theta not found in the support";
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Sharpness

bool sharpness_parity_coordinates(const IntMatrix& coordinates,
                                  const std::vector<std::size_t>& subset_positions) {
  const std::size_t r = coordinates.size();
  if (r == 0) return true;
  const std::size_t b = coordinates.front().size();
  IntMatrix system(b + 1, std::vector<long long>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    if (coordinates[k].size() != b) throw InvalidInput("ragged coordinate matrix");
    for (std::size_t c = 0; c < b; ++c) system[c][k] = coordinates[k][c];
    system[b][k] = 1;
  }
  for (const auto& v : integer_kernel_basis(system)) {
    long long sum = 0;
    for (std::size_t p : subset_positions) {
      if (p >= r) throw InvalidInput("subset position out of range");
      sum += v[p];
    }
    if (sum % 2 != 0) return false;
  }
  return true;
}

bool sharpness_parity(const SpectralDecomposition& d, VertexId u,
                      const std::vector<std::size_t>& subset) {
  const EigenvalueSupport s = support(d, u);
  const auto pos = positions_in(s, subset);
  const PeriodicityInfo per = periodicity(d, u);
  if (!per.periodic) {
    throw Unsupported("sharpness parity needs a rescaled-integer support");
  }
  IntMatrix coords;
  for (long long o : per.offsets) coords.push_back({o});
  return sharpness_parity_coordinates(coords, pos);
}

// ---------------------------------------------------------------------------
// Products

SedentaryReport product_compose(const std::vector<SedentaryReport>& factors,
                                const ProductComposeOptions& options) {
  if (factors.empty()) throw InvalidInput("product needs at least one factor");
  const MatrixKind kind = factors.front().kind;
  for (const auto& f : factors) {
    if (!(f.kind == kind)) throw InvalidInput("product factors use different matrix kinds");
  }
  if (!kind.kronecker_compatible()) {
    throw InvalidInput("walks under " + kind.to_string() + " do not factor over products");
  }

  SedentaryReport out;
  out.kind = kind;
  out.graph = "product(";
  std::size_t order = 1;
  VertexId vertex = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out.graph += ", ";
    out.graph += factors[i].graph;
    vertex = vertex * factors[i].graph_order + factors[i].vertex;
    order *= factors[i].graph_order;
  }
  out.graph += ")";
  out.graph_order = order;
  out.vertex = vertex;

  SedentaryCertificate cert;
  cert.kind = CertificateKind::ProductComposition;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].classification == Classification::NotSedentary) {
      cert.claims_sedentary = false;
      cert.bound = 0.0;
      cert.note = "factor " + std::to_string(i) + " (" + factors[i].graph + ") is not sedentary";
      out.certificates.push_back(cert);
      out.classification = Classification::NotSedentary;
      return out;
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].classification == Classification::Unresolved) {
      cert.claims_sedentary = false;
      cert.note = "factor " + std::to_string(i) + " is unresolved";
      out.certificates.push_back(cert);
      out.classification = Classification::Unresolved;
      return out;
    }
  }
  double c = 1.0;
  for (const auto& f : factors) c *= f.C;
  cert.bound = c;
  out.C = c;
  out.classification = Classification::SedentaryAtLeast;

  const bool all_tight = std::all_of(factors.begin(), factors.end(), [](const auto& f) {
    return f.classification == Classification::TightlySedentary && f.oracle &&
           f.oracle->certified && f.oracle->period && !f.oracle->attainment_times.empty();
  });
  if (all_tight) {
    const double rho0 = *factors.front().oracle->period;
    long long multiple = 1;
    bool commensurate = true;
    for (const auto& f : factors) {
      const double ratio = *f.oracle->period / rho0;
      const auto q = rational_approximation(ratio, 1000, 1e-9 * std::max(1.0, ratio));
      if (!q) {
        commensurate = false;
        break;
      }
      const auto l = bounded_lcm(multiple, q->num, options.max_period_multiple);
      if (!l) {
        commensurate = false;
        break;
      }
      multiple = *l;
    }
    if (commensurate) {
      const double span = rho0 * static_cast<double>(multiple);
      std::vector<double> candidates;
      for (long long k = 0; k < multiple; ++k) {
        for (double tau : factors.front().oracle->attainment_times) {
          candidates.push_back(tau + static_cast<double>(k) * rho0);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      for (double t : candidates) {
        if (t <= 0.0 || t > span + options.time_tol) continue;
        bool common = true;
        for (std::size_t i = 1; i < factors.size() && common; ++i) {
          const double rho = *factors[i].oracle->period;
          bool hit = false;
          for (double tau : factors[i].oracle->attainment_times) {
            const double x = std::fmod(std::abs(t - tau), rho);
            if (x <= options.time_tol || rho - x <= options.time_tol) {
              hit = true;
              break;
            }
          }
          common = hit;
        }
        if (common) {
          out.classification = Classification::TightlySedentary;
          out.tight_time = t;
          cert.equality_times.push_back(t);
          break;
        }
      }
      if (!out.tight_time) cert.note = "no common attainment time within the joint period";
    } else {
      cert.note = "factor periods are not commensurate";
    }
  }
  out.certificates.push_back(cert);
  return out;
}

// ---------------------------------------------------------------------------
// classify

namespace {

struct ZeroCrossing {
  double time = 0.0;
};

// When the support is symmetric about c with matching weights,
// e^{-itc} U(t)_{u,u} = sum_k w_k cos(t (lambda_k - c)) is real; a negative
// value proves a zero.
std::optional<ZeroCrossing> find_zero_crossing(const EigenvalueSupport& s, double window,
                                               std::size_t n) {
  const std::size_t r = s.size();
  if (r < 2) return std::nullopt;
  const double c = 0.5 * (s.eigenvalues.front() + s.eigenvalues.back());
  const double scale = std::max(1.0, std::abs(s.eigenvalues.front() - s.eigenvalues.back()));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t m = r - 1 - k;
    if (std::abs(s.eigenvalues[k] + s.eigenvalues[m] - 2.0 * c) > 1e-9 * scale) return std::nullopt;
    if (std::abs(s.weights[k] - s.weights[m]) > 1e-9) return std::nullopt;
  }
  auto g = [&](double t) {
    double v = 0.0;
    for (std::size_t k = 0; k < r; ++k) v += s.weights[k] * std::cos(t * (s.eigenvalues[k] - c));
    return v;
  };
  std::vector<double> values(n + 1);
  parallel_for(n + 1, [&](std::size_t i) {
    values[i] = g(window * static_cast<double>(i) / static_cast<double>(n));
  });
  for (std::size_t i = 1; i <= n; ++i) {
    if (values[i] < -1e-9) {
      double lo = window * static_cast<double>(i - 1) / static_cast<double>(n);
      double hi = window * static_cast<double>(i) / static_cast<double>(n);
      for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
      }
      return ZeroCrossing{0.5 * (lo + hi)};
    }
  }
  return std::nullopt;
}

void add_subset_certificate(const SpectralDecomposition& d, VertexId u,
                            const std::vector<std::size_t>& subset, const SubsetBoundOptions& o,
                            std::vector<SedentaryCertificate>& out,
                            std::vector<std::string>& warnings) {
  try {
    out.push_back(subset_bound(d, u, subset, o));
  } catch (const CertificateRefused&) {
    // Uninformative subset.
  } catch (const InvalidInput& e) {
    warnings.push_back(e.what());
  }
}

}  // namespace

SedentaryReport classify(const WeightedGraph& g, MatrixKind kind, VertexId u,
                         const ClassifyOptions& options) {
  const SpectralDecomposition d = decompose(assemble(g, kind), options.spectral);
  return classify(g, d, u, options);
}

SedentaryReport classify(const WeightedGraph& g, const SpectralDecomposition& d, VertexId u,
                         const ClassifyOptions& options) {
  if (u >= g.order()) throw InvalidInput("vertex " + std::to_string(u) + " out of range");
  const MatrixKind kind = d.kind();
  SedentaryReport report;
  report.kind = kind;
  report.vertex = u;
  report.graph_order = g.order();
  report.graph = !options.graph_name.empty() ? options.graph_name
                 : options.family          ? options.family->to_string()
                                           : std::string("graph");
  if (!g.is_connected()) report.warnings.push_back("graph is not connected");

  const WalkEvaluator walk(d);
  const EigenvalueSupport s = support(d, u);

  // (1) period and window
  const PeriodicityInfo per = periodicity(d, u);
  report.periodicity = per;
  MinimizeOptions mo = options.minimize;
  if (!mo.window) {
    if (!per.periodic) mo.window = options.uncertified_window;
  }

  // (2) oracle
  const MinimizationResult oracle = minimize_diagonal(walk, u, mo);
  report.oracle = oracle;

  std::vector<SedentaryCertificate> certs;
  bool refuted = false;

  // (3) state transfer
  {
    std::vector<double> times;
    for (const auto& [t, mag] : oracle.local_minima) {
      if (mag <= 1e-2) times.push_back(t);
    }
    if (const auto pst = pst_at_times(walk, u, times)) {
      report.pst = pst;
      report.pst_proof = oracle.certified;
      if (oracle.certified) {
        SedentaryCertificate c;
        c.kind = CertificateKind::NotSedentaryPST;
        c.claims_sedentary = false;
        c.equality_times = {pst->time};
        c.note = "|U(t)_{u,v}| = " + fmt(pst->magnitude) + " with v = " +
                 std::to_string(pst->target);
        certs.push_back(c);
        refuted = true;
      } else {
        report.warnings.push_back("perfect state transfer observed to vertex " +
                                  std::to_string(pst->target) + " at t = " + fmt(pst->time) +
                                  " on an uncertified window");
      }
    }
  }

  // (4) sign change of a real diagonal
  if (const auto z = find_zero_crossing(s, oracle.window, oracle.grid)) {
    SedentaryCertificate c;
    c.kind = CertificateKind::NotSedentaryZeroCrossing;
    c.claims_sedentary = false;
    c.equality_times = {z->time};
    c.note = "real-valued rotated diagonal changes sign; zero near t = " + fmt(z->time);
    certs.push_back(c);
    refuted = true;
  }

  // (5) twins
  const auto twins = find_twin_sets(g, kind);
  std::optional<TwinSet> twin = twin_set_of(twins, u);
  if (twin) {
    if (verify_twin_eigenvector(d, *twin)) {
      certs.push_back(twin_bound(d, *twin, u));
    } else {
      report.warnings.push_back("twin eigenvector check failed; twin bound skipped");
      twin.reset();
    }
  }

  // (6) subset bounds
  SubsetBoundOptions so;
  so.minimize = options.minimize;
  so.minimize.window.reset();
  std::optional<std::size_t> best_singleton;
  if (s.size() >= 2) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (s.weights[k] > s.weights[best]) best = k;
    }
    best_singleton = s.indices[best];
    add_subset_certificate(d, u, {s.indices[best]}, so, certs, report.warnings);
    if (twin) {
      const double tol = 1e-7 * std::max(1.0, d.norm());
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != best && std::abs(s.eigenvalues[k] - twin->theta) <= tol) {
          add_subset_certificate(d, u, {s.indices[k]}, so, certs, report.warnings);
        }
      }
    }
    if (options.exhaustive_subsets && s.size() <= options.exhaustive_cap) {
      const std::size_t r = s.size();
      std::optional<SedentaryCertificate> best_cert;
      SubsetBoundOptions coarse = so;
      coarse.minimize.grid = 1024;
      coarse.minimize.max_grid = 1 << 16;
      for (unsigned long mask = 1; mask + 1 < (1ul << r); ++mask) {
        std::vector<std::size_t> subset;
        double a = 0.0;
        for (std::size_t k = 0; k < r; ++k) {
          if (mask & (1ul << k)) {
            subset.push_back(s.indices[k]);
            a += s.weights[k];
          }
        }
        if (subset.size() < 2 || a <= 0.5 + 1e-12) continue;
        try {
          SedentaryCertificate c = subset_bound(d, u, subset, coarse);
          if (!best_cert || c.bound > best_cert->bound) best_cert = std::move(c);
        } catch (const CertificateRefused&) {
        }
      }
      if (best_cert && best_cert->bound > 0.0) certs.push_back(*best_cert);
    }
  }

  // (7) named family
  std::optional<SedentaryReport> family_report;
  if (options.family) {
    try {
      if (build_family(*options.family).order() != g.order()) {
        report.warnings.push_back("family spec does not match the graph order");
      } else {
        family_report = family_closed_classification(*options.family, kind, u);
        for (const auto& c : family_report->certificates) certs.push_back(c);
        if (family_report->classification == Classification::NotSedentary) refuted = true;
      }
    } catch (const Unsupported&) {
      // Outside the catalogue.
    }
  }

  // (8) Cartesian factors
  std::vector<ProductFactor> factors = options.factors;
  if (factors.empty() && options.family) {
    for (const FamilySpec& f : product_factors(*options.family)) {
      factors.push_back({build_family(f), f, f.to_string()});
    }
  }
  if (factors.size() >= 2 && kind.kronecker_compatible()) {
    std::size_t total = 1;
    for (const auto& f : factors) total *= f.graph.order();
    if (total != g.order()) {
      report.warnings.push_back("product factors do not match the graph order");
    } else {
      std::vector<VertexId> coords(factors.size());
      VertexId rest = u;
      for (std::size_t i = factors.size(); i-- > 0;) {
        coords[i] = rest % factors[i].graph.order();
        rest /= factors[i].graph.order();
      }
      std::vector<SedentaryReport> parts;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        ClassifyOptions sub;
        sub.spectral = options.spectral;
        sub.minimize = options.minimize;
        sub.minimize.window.reset();
        sub.uncertified_window = options.uncertified_window;
        sub.family = factors[i].family;
        sub.graph_name = factors[i].name;
        parts.push_back(classify(factors[i].graph, kind, coords[i], sub));
      }
      SedentaryReport composed = product_compose(parts);
      for (const auto& c : composed.certificates) certs.push_back(c);
      if (composed.classification == Classification::NotSedentary) refuted = true;
    }
  }

  // (9) sharpness
  std::optional<SedentaryCertificate> sharp;
  if (best_singleton) {
    const std::size_t k = *s.position(*best_singleton);
    const double a = s.weights[k];
    if (a > 0.5 + 1e-12 && per.periodic) {
      if (sharpness_parity(d, u, {*best_singleton})) {
        SedentaryCertificate c;
        c.kind = CertificateKind::SharpnessParity;
        c.subset = {*best_singleton};
        c.subset_eigenvalues = {s.eigenvalues[k]};
        c.a = a;
        c.bound = 2.0 * a - 1.0;
        c.note = "every integer relation has even weight on S";
        sharp = c;
        certs.push_back(c);
      }
    }
  }

  // (10) reconcile
  double best_claim = 0.0;
  for (const auto& c : certs) {
    if (c.claims_sedentary) best_claim = std::max(best_claim, c.bound);
    if (c.claims_sedentary && c.bound > oracle.minimum + 1e-6) {
      report.warnings.push_back(std::string(to_string(c.kind)) + " bound " + fmt(c.bound) +
                                " exceeds the oracle minimum " + fmt(oracle.minimum));
    }
  }
  if (refuted) {
    report.classification = Classification::NotSedentary;
    report.C = 0.0;
  } else if (oracle.certified) {
    if (oracle.minimum <= 1e-6) {
      report.classification = Classification::NotSedentary;
      report.C = 0.0;
      report.tight_time = oracle.argmin;
    } else {
      report.classification = Classification::TightlySedentary;
      report.C = oracle.minimum;
      double snapped = -1.0;
      for (const auto& c : certs) {
        if (c.claims_sedentary && c.analytic && std::abs(c.bound - oracle.minimum) <= 1e-6) {
          snapped = std::max(snapped, c.bound);
        }
      }
      if (snapped >= 0.0) report.C = snapped;
      report.tight_time = oracle.argmin;
      double gap = 1e-6;
      for (const auto& c : certs) {
        if (!c.claims_sedentary) continue;
        for (double t : c.equality_times) {
          if (std::abs(t - oracle.argmin) <= gap) {
            gap = std::abs(t - oracle.argmin);
            report.tight_time = t;
          }
        }
      }
    }
  } else if (family_report && family_report->classification != Classification::Unresolved) {
    report.classification = family_report->classification;
    report.C = family_report->C;
    report.tight_time = family_report->tight_time;
  } else if (sharp && sharp->bound > 0.0 && sharp->bound >= best_claim - 1e-12) {
    report.classification = Classification::SharplySedentary;
    report.C = sharp->bound;
  } else if (best_claim > 0.0) {
    report.classification = Classification::SedentaryAtLeast;
    report.C = best_claim;
  } else {
    report.classification = Classification::Unresolved;
    report.C = 0.0;
  }
  report.certificates = std::move(certs);
  return report;
}

}  // namespace qwsed
