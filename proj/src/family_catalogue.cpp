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

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qwsed/rational.hpp"
#include "qwsed/sedentary.hpp"

namespace qwsed {

namespace {

constexpr double kPi = std::numbers::pi;
using Type = MatrixKind::Type;

struct Entry {
  Classification classification = Classification::Unresolved;
  double C = 0.0;
  std::optional<double> time;
  std::string note;
};

Entry not_sedentary(std::string note) {
  return {Classification::NotSedentary, 0.0, std::nullopt, std::move(note)};
}
Entry tight(double c, double t, std::string note) {
  return {Classification::TightlySedentary, c, t, std::move(note)};
}
Entry at_least(double c, std::string note) {
  return {Classification::SedentaryAtLeast, c, std::nullopt, std::move(note)};
}
Entry sharply(double c, std::string note) {
  return {Classification::SharplySedentary, c, std::nullopt, std::move(note)};
}
Entry unresolved(std::string note) {
  return {Classification::Unresolved, 0.0, std::nullopt, std::move(note)};
}

[[noreturn]] void unsupported(const FamilySpec& spec, MatrixKind kind, VertexId u) {
  throw Unsupported("no catalogued classification for vertex " + std::to_string(u) + " of " +
                    spec.to_string() + " under " + kind.to_string());
}

std::optional<long long> exact_sqrt(long long x) {
  if (x < 0) return std::nullopt;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

// Rook graphs and K_n under the adjacency matrix.
Entry rook_adjacency(const std::vector<long long>& sizes) {
  double c = 1.0;
  std::optional<int> e;
  bool equal = true;
  for (long long n : sizes) {
    if (n == 1) continue;
    if (n == 2) return not_sedentary("a K_2 factor has perfect state transfer");
    c *= 1.0 - 2.0 / static_cast<double>(n);
    const int v = nu2(n);
    if (e && *e != v) equal = false;
    e = v;
  }
  if (!e) return tight(1.0, 0.0, "single vertex");
  if (!equal) return at_least(c, "factor sizes differ in 2-adic valuation");
  return tight(c, kPi / std::ldexp(1.0, *e), "product of complete-graph factors");
}

// Tight entries on a d-regular graph transfer between kinds; normalized
// kinds rescale time by d.
std::optional<Entry> regular_transfer(Entry e, MatrixKind kind, double degree) {
  if (!kind.normalized()) return e;
  if (degree <= 0.0) return std::nullopt;
  if (e.time) *e.time *= degree;
  return e;
}

Entry twin_entry(long long size, const std::string& what) {
  return at_least(1.0 - 2.0 / static_cast<double>(size),
                  "twin class of size " + std::to_string(size) + " (" + what + ")");
}

std::optional<Entry> star_entry(long long n, MatrixKind kind, VertexRole role) {
  const double nd = static_cast<double>(n);
  if (kind.type == Type::Adjacency) {
    if (role == VertexRole::Center) return not_sedentary("cos(sqrt(n) t) vanishes");
    if (n <= 2) return not_sedentary("leaf of a path on at most three vertices");
    return tight(1.0 - 2.0 / nd, kPi / std::sqrt(nd), "leaf of a star");
  }
  if (kind.type == Type::Laplacian) {
    if (role == VertexRole::Center) {
      if (n == 1) return not_sedentary("K_2");
      return tight(1.0 - 2.0 / (nd + 1.0), kPi / (nd + 1.0), "centre of a star");
    }
    if (n == 1) return not_sedentary("K_2");
    if (n == 2) return std::nullopt;
    if (n % 2 == 1) return tight(1.0 - 2.0 / nd, kPi, "leaf of a star, odd n");
    return at_least(1.0 - 2.0 / nd, "leaf of a star, even n");
  }
  return std::nullopt;
}

Entry laplacian_join_independent(long long m, long long n) {
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  if (m == 1) {
    if (n == 1) return not_sedentary("K_2");
    return tight(1.0 - 2.0 / (nd + 1.0), kPi / (nd + 1.0), "cone apex");
  }
  if (m == 2) {
    if (n == 1) return tight(1.0 / 3.0, kPi, "apex of P_3");
    if (n % 4 == 2) return not_sedentary("diagonal vanishes at pi/2");
    if (n % 4 == 0) return tight(2.0 / (nd + 2.0), kPi / 2.0, "apex, n = 0 mod 4");
    return tight(std::sqrt(2.0) / (nd + 2.0), kPi / 2.0, "apex, odd n");
  }
  const double c = 1.0 - 2.0 / md;
  if (nu2(m) == nu2(n)) {
    return tight(c, kPi / static_cast<double>(std::gcd(m, n)), "independent join vertex");
  }
  return at_least(c, "independent join vertex, 2-adic valuations differ");
}

std::optional<Entry> adjacency_double_cone_apex(const FamilySpec& spec) {
  const auto deg = spec.base->regular_degree();
  if (!deg) return std::nullopt;
  const auto d = as_integer(*deg, 1e-9);
  if (!d) return std::nullopt;
  const long long n = static_cast<long long>(spec.base->order());
  if (*d == 0) return not_sedentary("base has no edges");
  const auto r = exact_sqrt(*d * *d + 8 * n);
  if (!r) return not_sedentary("d^2 + 8n is not a square");
  if (nu2(*d + *r) == nu2(*d - *r)) return not_sedentary("2-adic valuations of d +/- r agree");
  const long long s = (*r - *d) / 2;
  const long long g = std::gcd(*d, s);
  const long long d1 = *d / g;
  const long long s1 = s / g;
  if (s1 >= 3) {
    return at_least(std::sqrt(2.0) / static_cast<double>(d1 + 2 * s1),
                    "apex of a disconnected double cone, s1 >= 3");
  }
  const double c = s1 == 1 ? 1.0 / static_cast<double>(d1 + 2)
                           : std::sqrt(2.0) / static_cast<double>(d1 + 4);
  const auto f = closed_form(spec, MatrixKind::adjacency(), VertexRole::Apex);
  for (long long j = 1; j < 4 * (*d + s) + 8; j += 2) {
    const double t = static_cast<double>(j) * kPi / static_cast<double>(s);
    if (std::abs(std::abs(f(t)) - c) <= 1e-9) {
      return tight(c, t, "apex of a disconnected double cone");
    }
  }
  return at_least(c, "apex of a disconnected double cone; no equality time found");
}

std::optional<Entry> double_star_entry(const FamilySpec& spec, VertexId u) {
  const long long k = spec.params[0];
  const long long l = spec.params[1];
  const VertexRole role = role_of(spec, u);
  if (role == VertexRole::Internal) {
    if (k == l) return not_sedentary("rotated diagonal is real and changes sign");
    return unresolved("internal vertex of an asymmetric double star");
  }
  const bool first_side = u < static_cast<VertexId>(k);
  const long long own = first_side ? k : l;
  const long long other = first_side ? l : k;
  if (own == 1) return std::nullopt;
  if (own == 2) {
    if (other == 2) return tight(0.25, 2.0 * kPi / 3.0, "leaf of S_{2,2}");
    return not_sedentary("leaf pair of size two");
  }
  const double c = 1.0 - 2.0 / static_cast<double>(own);
  if (own != other) return at_least(c, "leaf twin class");
  if (exact_sqrt(4 * own + 1)) {
    // cos(t lambda_1) = cos(t lambda_2) = -1 has no solution here, so the
    // bound is strict; the oracle decides the true minimum.
    return at_least(c, "leaf of S_{k,k}, 4k+1 a square; bound not attained");
  }
  return sharply(c, "leaf of S_{k,k}, 4k+1 not a square");
}

std::optional<Entry> lookup(const FamilySpec& spec, MatrixKind kind, VertexId u) {
  const auto& p = spec.params;
  const VertexRole role = role_of(spec, u);
  const Type type = kind.type;

  switch (spec.kind) {
    case FamilyKind::Empty:
      return tight(1.0, 0.0, "isolated vertex");
    case FamilyKind::Complete: {
      if (p[0] == 1) return tight(1.0, 0.0, "single vertex");
      return regular_transfer(rook_adjacency({p[0]}), kind, static_cast<double>(p[0] - 1));
    }
    case FamilyKind::Rook:
    case FamilyKind::Hamming: {
      std::vector<long long> sizes = p;
      if (spec.kind == FamilyKind::Hamming) sizes.assign(static_cast<std::size_t>(p[0]), p[1]);
      double degree = 0.0;
      for (long long n : sizes) degree += static_cast<double>(n - 1);
      return regular_transfer(rook_adjacency(sizes), kind, degree);
    }
    case FamilyKind::Star:
      return star_entry(p[0], kind, role);
    case FamilyKind::Cone: {
      const double n = static_cast<double>(spec.base->order());
      if (type == Type::Laplacian) {
        if (spec.base->order() == 1) return not_sedentary("K_2");
        if (role == VertexRole::Apex) return tight(1.0 - 2.0 / (n + 1.0), kPi / (n + 1.0), "cone apex");
        return std::nullopt;
      }
      if (type != Type::Adjacency || role != VertexRole::Apex) return std::nullopt;
      const auto d = spec.base->regular_degree();
      if (!d) return std::nullopt;
      if (*d == 0.0) return not_sedentary("centre of a star");
      const double r = std::sqrt(*d * *d + 4.0 * n);
      return tight(*d / r, kPi / r, "cone apex over a regular base");
    }
    case FamilyKind::CompleteJoin:
    case FamilyKind::DoubleCone:
      if (spec.kind == FamilyKind::DoubleCone && !spec.connected) {
        if (role != VertexRole::Apex) return std::nullopt;
        if (type == Type::Laplacian) {
          return laplacian_join_independent(2, static_cast<long long>(spec.base->order()));
        }
        if (type == Type::Adjacency) return adjacency_double_cone_apex(spec);
        return std::nullopt;
      }
      if (type == Type::Laplacian &&
          (role == VertexRole::Clique || role == VertexRole::Apex)) {
        const long long m = spec.kind == FamilyKind::DoubleCone ? 2 : p[0];
        const double total = static_cast<double>(m) + static_cast<double>(spec.base->order());
        if (total == 2.0) return not_sedentary("K_2");
        return tight(1.0 - 2.0 / total, kPi / total, "clique vertex of a complete join");
      }
      return std::nullopt;
    case FamilyKind::EmptyJoin:
      if (role != VertexRole::Independent) return std::nullopt;
      if (type == Type::Laplacian) {
        return laplacian_join_independent(p[0], static_cast<long long>(spec.base->order()));
      }
      if (type == Type::Adjacency && p[0] == 2) return adjacency_double_cone_apex(spec);
      return std::nullopt;
    case FamilyKind::DoubleStar:
      if (type != Type::Adjacency) return std::nullopt;
      return double_star_entry(spec, u);
    case FamilyKind::Lollipop:
      if (role == VertexRole::Clique) return twin_entry(p[0] - 1, "clique vertices off the tail");
      return std::nullopt;
    case FamilyKind::Barbell:
      if (role != VertexRole::Clique) return std::nullopt;
      if (u < static_cast<VertexId>(p[0])) return twin_entry(p[0] - 1, "first clique");
      return twin_entry(p[2] - 1, "second clique");
    case FamilyKind::XTail:
    case FamilyKind::YTail: {
      const bool x = spec.kind == FamilyKind::XTail;
      if (role == VertexRole::Clique && (x || p[2] == 0)) return twin_entry(p[0], "clique");
      if (role == VertexRole::Independent && (!x || p[2] == 0) && p[1] >= 3) {
        return twin_entry(p[1], "independent set");
      }
      return std::nullopt;
    }
    case FamilyKind::CompleteMultipartite: {
      long long singletons = 0;
      for (long long n : p) singletons += n == 1 ? 1 : 0;
      long long end = 0;
      for (long long n : p) {
        end += n;
        if (static_cast<long long>(u) < end) {
          if (n >= 3) return twin_entry(n, "part");
          if (n == 1 && singletons >= 3) return twin_entry(singletons, "singleton parts");
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
    case FamilyKind::Threshold: {
      long long end = 0;
      for (long long n : p) {
        end += n;
        if (static_cast<long long>(u) < end) {
          if (n >= 3) return twin_entry(n, "threshold block");
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
    case FamilyKind::Path:
    case FamilyKind::Cycle:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

SedentaryReport family_closed_classification(const FamilySpec& spec, MatrixKind kind,
                                             VertexId u) {
  spec.validate();
  const auto entry = lookup(spec, kind, u);
  if (!entry) unsupported(spec, kind, u);

  SedentaryReport report;
  report.graph = spec.to_string();
  report.graph_order = build_family(spec).order();
  report.kind = kind;
  report.vertex = u;
  report.classification = entry->classification;
  report.C = entry->C;
  report.tight_time = entry->time;

  SedentaryCertificate cert;
  cert.kind = CertificateKind::ClosedFormFamily;
  cert.bound = entry->C;
  cert.claims_sedentary = entry->classification != Classification::NotSedentary &&
                          entry->classification != Classification::Unresolved;
  if (entry->time) cert.equality_times.push_back(*entry->time);
  cert.note = entry->note;
  report.certificates.push_back(cert);
  return report;
}

}  // namespace qwsed
