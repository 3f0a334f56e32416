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

#ifndef QWSED_FAMILY_HPP_
#define QWSED_FAMILY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwsed/graph.hpp"

namespace qwsed {

enum class FamilyKind {
  Complete,              // n
  Empty,                 // n
  Path,                  // n
  Cycle,                 // n
  Star,                  // n leaves
  CompleteMultipartite,  // n_1, ..., n_k
  Rook,                  // n_1, ..., n_m
  Hamming,               // k, n
  Lollipop,              // n, k
  Barbell,               // n, k, m
  DoubleStar,            // k, l
  Threshold,             // n_1, n_2, ...
  Cone,                  // base
  DoubleCone,            // base, connected flag
  CompleteJoin,          // m, base: K_m v X
  EmptyJoin,             // m, base: O_m v X
  XTail,                 // n, m, k
  YTail,                 // n, m, k
};

std::string_view to_string(FamilyKind kind);

// A named graph family member.
//
// Vertex orderings:
//   Star          centre 0, leaves 1..n.
//   DoubleStar    leaves of u are 0..k-1, u = k, v = k+1, leaves of v follow.
//   Lollipop      K_n on 0..n-1 (attachment vertex 0), then the tail.
//   Barbell       K_n on 0..n-1, K_m on n..n+m-1, then the k path vertices
//                 joining 0 to n.
//   Threshold     ((O_{n1} v K_{n2}) u O_{n3}) v K_{n4} ..., blocks in order.
//   Multipartite  parts in order.
//   Cone          apex 0, base 1..n.
//   DoubleCone    apexes 0 and 1 (adjacent iff connected), base 2..n+1.
//   Complete/EmptyJoin  the m joined vertices first, then the base.
//   XTail/YTail   K_n, then O_m, then tails in order of their roots.
//   Rook/Hamming  row-major Cartesian product ids.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  std::vector<long long> params;
  bool connected = false;  // DoubleCone only
  std::shared_ptr<const WeightedGraph> base;
  std::string base_name;  // textual form of the base, for reports

  // Throws InvalidInput when parameters violate the family's domain.
  void validate() const;
  std::string to_string() const;
};

// Grammar:
//   complete:N  empty:N  path:N  cycle:N  star:N
//   multipartite:N1,N2,...      rook:N1,N2,...   rook:k=K,n=N
//   hamming:K,N                 lollipop:N,K     barbell:N,K,M
//   doublestar:K,L              threshold:N1,N2,...
//   xtail:N,M,K                 ytail:N,M,K
//   cone:BASE                   doublecone:connected|disconnected:BASE
//   kjoin:M:BASE                ojoin:M:BASE
// where BASE is either @path/to/file.graph or another family spec.
FamilySpec parse_family(std::string_view text);

WeightedGraph build_family(const FamilySpec& spec);

enum class VertexRole {
  Any,
  Apex,
  Base,
  Center,
  Leaf,
  Internal,
  Clique,
  Independent,
  Tail,
  Attachment,
};

std::string_view to_string(VertexRole role);
std::optional<VertexRole> parse_role(std::string_view text);

// Structural role of vertex u in the member described by spec.
VertexRole role_of(const FamilySpec& spec, VertexId u);
std::optional<VertexId> first_vertex_with_role(const FamilySpec& spec, VertexRole role);

// Expands the first "a..b" range in a textual family spec. A spec without a
// range yields itself with value 0.
struct ScanMember {
  long long value = 0;
  std::string spec;
};
std::vector<ScanMember> expand_scan(std::string_view text);

// Cartesian factors of Rook and Hamming members (complete graphs); empty for
// every other kind.
std::vector<FamilySpec> product_factors(const FamilySpec& spec);

}  // namespace qwsed

#endif  // QWSED_FAMILY_HPP_
