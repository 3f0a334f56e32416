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

#include "qwsed/error.hpp"
#include "qwsed/walk.hpp"

namespace qwsed {

namespace {

using Type = MatrixKind::Type;

Complex phase(double t, double lambda) { return std::polar(1.0, t * lambda); }

std::optional<double> base_degree(const FamilySpec& spec) {
  if (!spec.base) return std::nullopt;
  return spec.base->regular_degree();
}

bool is_disconnected_double_cone_apex(const FamilySpec& spec, VertexRole role) {
  return (spec.kind == FamilyKind::DoubleCone && !spec.connected && role == VertexRole::Apex) ||
         (spec.kind == FamilyKind::EmptyJoin && spec.params[0] == 2 &&
          role == VertexRole::Independent);
}

std::optional<std::function<Complex(double)>> lookup(const FamilySpec& spec, MatrixKind kind,
                                                     VertexRole role) {
  const Type type = kind.type;
  const auto& p = spec.params;

  if (spec.kind == FamilyKind::Complete && type == Type::Adjacency) {
    const double n = static_cast<double>(p[0]);
    return [n](double t) { return phase(t, -1.0) * (n - 1.0 + phase(t, n)) / n; };
  }

  if (type == Type::Laplacian) {
    std::optional<double> big_n;
    if (spec.kind == FamilyKind::CompleteJoin && role == VertexRole::Clique) {
      big_n = static_cast<double>(p[0]) + static_cast<double>(spec.base->order());
    } else if (spec.kind == FamilyKind::Star && role == VertexRole::Center) {
      big_n = static_cast<double>(p[0]) + 1.0;
    }
    if (big_n) {
      const double total = *big_n;
      return [total](double t) { return 1.0 / total + (total - 1.0) / total * phase(t, total); };
    }
    std::optional<double> m;
    if (spec.kind == FamilyKind::EmptyJoin && role == VertexRole::Independent) {
      m = static_cast<double>(p[0]);
    } else if (spec.kind == FamilyKind::DoubleCone && !spec.connected &&
               role == VertexRole::Apex) {
      m = 2.0;
    }
    if (m) {
      const double mm = *m;
      const double n = static_cast<double>(spec.base->order());
      return [mm, n](double t) {
        return 1.0 / (mm + n) + (mm - 1.0) / mm * phase(t, n) +
               n / (mm * (mm + n)) * phase(t, mm + n);
      };
    }
    return std::nullopt;
  }

  if (type != Type::Adjacency) return std::nullopt;

  if (is_disconnected_double_cone_apex(spec, role)) {
    const auto d = base_degree(spec);
    if (!d) return std::nullopt;
    const double n = static_cast<double>(spec.base->order());
    const double r = std::sqrt(*d * *d + 8.0 * n);
    const double lp = (*d + r) / 2.0;
    const double lm = (*d - r) / 2.0;
    return [n, lp, lm](double t) {
      return Complex(0.5) + n / (2.0 * n + lp * lp) * phase(t, lp) +
             n / (2.0 * n + lm * lm) * phase(t, lm);
    };
  }

  if (spec.kind == FamilyKind::Cone && role == VertexRole::Apex) {
    const auto d = base_degree(spec);
    if (!d) return std::nullopt;
    const double n = static_cast<double>(spec.base->order());
    const double r = std::sqrt(*d * *d + 4.0 * n);
    const double lp = (*d + r) / 2.0;
    const double lm = (*d - r) / 2.0;
    return [n, lp, lm](double t) {
      return n / (n + lp * lp) * phase(t, lp) + n / (n + lm * lm) * phase(t, lm);
    };
  }

  if (spec.kind == FamilyKind::Star) {
    const double n = static_cast<double>(p[0]);
    const double s = std::sqrt(n);
    if (role == VertexRole::Center) return [s](double t) { return Complex(std::cos(s * t)); };
    if (role == VertexRole::Leaf) {
      return [n, s](double t) { return Complex(1.0 - 1.0 / n + std::cos(s * t) / n); };
    }
  }

  if (spec.kind == FamilyKind::DoubleStar && p[0] == p[1]) {
    const double k = static_cast<double>(p[0]);
    const double q = 4.0 * k + 1.0;
    const double s = std::sqrt(q);
    const double l1 = -(1.0 + s) / 2.0;
    const double l2 = (s - 1.0) / 2.0;
    if (role == VertexRole::Internal) {
      return [q, s, l1, l2](double t) {
        return Complex((1.0 + s) * (1.0 + s) * std::cos(t * l1) / (2.0 * (q + s)) +
                       (1.0 - s) * (1.0 - s) * std::cos(t * l2) / (2.0 * (q - s)));
      };
    }
    if (role == VertexRole::Leaf) {
      return [k, q, s, l1, l2](double t) {
        return Complex((k - 1.0) / k + 2.0 * std::cos(t * l1) / (q + s) +
                       2.0 * std::cos(t * l2) / (q - s));
      };
    }
  }
  return std::nullopt;
}

}  // namespace

std::function<Complex(double)> closed_form(const FamilySpec& spec, MatrixKind kind,
                                           VertexRole role) {
  auto f = lookup(spec, kind, role);
  if (!f) {
    throw Unsupported("no closed form for " + spec.to_string() + " under " + kind.to_string() +
                      " at role " + std::string(to_string(role)));
  }
  return *f;
}

bool has_closed_form(const FamilySpec& spec, MatrixKind kind, VertexRole role) {
  return lookup(spec, kind, role).has_value();
}

}  // namespace qwsed
