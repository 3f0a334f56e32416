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

#include "qwsed/family.hpp"

#include <algorithm>
#include <charconv>
#include <regex>

#include "qwsed/error.hpp"

namespace qwsed {

namespace {

struct KindName {
  FamilyKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::Complete, "complete"},
    {FamilyKind::Empty, "empty"},
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::Star, "star"},
    {FamilyKind::CompleteMultipartite, "multipartite"},
    {FamilyKind::Rook, "rook"},
    {FamilyKind::Hamming, "hamming"},
    {FamilyKind::Lollipop, "lollipop"},
    {FamilyKind::Barbell, "barbell"},
    {FamilyKind::DoubleStar, "doublestar"},
    {FamilyKind::Threshold, "threshold"},
    {FamilyKind::Cone, "cone"},
    {FamilyKind::DoubleCone, "doublecone"},
    {FamilyKind::CompleteJoin, "kjoin"},
    {FamilyKind::EmptyJoin, "ojoin"},
    {FamilyKind::XTail, "xtail"},
    {FamilyKind::YTail, "ytail"},
};

long long parse_int(std::string_view text, std::string_view context) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw InvalidInput("family '" + std::string(context) + "': '" +
                       std::string(text) + "' is not an integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<long long> parse_list(std::string_view text, std::string_view context) {
  std::vector<long long> out;
  for (auto item : split(text, ',')) out.push_back(parse_int(item, context));
  return out;
}

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) throw InvalidInput("family " + std::string(to_string(spec.kind)) + ": " + what);
}

void require_count(const FamilySpec& spec, std::size_t count) {
  require(spec.params.size() == count, spec,
          "expected " + std::to_string(count) + " parameter(s)");
}

std::size_t as_size(long long v) { return static_cast<std::size_t>(v); }

std::size_t member_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Complete:
    case FamilyKind::Empty:
    case FamilyKind::Path:
    case FamilyKind::Cycle:
      return as_size(p[0]);
    case FamilyKind::Star:
      return as_size(p[0]) + 1;
    case FamilyKind::CompleteMultipartite:
    case FamilyKind::Threshold: {
      long long total = 0;
      for (long long v : p) total += v;
      return as_size(total);
    }
    case FamilyKind::Rook: {
      long long total = 1;
      for (long long v : p) total *= v;
      return as_size(total);
    }
    case FamilyKind::Hamming: {
      long long total = 1;
      for (long long i = 0; i < p[0]; ++i) total *= p[1];
      return as_size(total);
    }
    case FamilyKind::Lollipop:
      return as_size(p[0] + p[1]);
    case FamilyKind::Barbell:
      return as_size(p[0] + p[1] + p[2]);
    case FamilyKind::DoubleStar:
      return as_size(p[0] + p[1] + 2);
    case FamilyKind::Cone:
      return spec.base->order() + 1;
    case FamilyKind::DoubleCone:
      return spec.base->order() + 2;
    case FamilyKind::CompleteJoin:
    case FamilyKind::EmptyJoin:
      return as_size(p[0]) + spec.base->order();
    case FamilyKind::XTail:
    case FamilyKind::YTail: {
      const long long tails = spec.kind == FamilyKind::XTail ? p[1] : p[0];
      return as_size(p[0] + p[1] + tails * p[2]);
    }
  }
  return 0;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "unknown";
}

void FamilySpec::validate() const {
  const auto& p = params;
  auto all_at_least = [&p](long long lo) {
    return std::all_of(p.begin(), p.end(), [lo](long long v) { return v >= lo; });
  };
  switch (kind) {
    case FamilyKind::Complete:
    case FamilyKind::Empty:
    case FamilyKind::Path:
    case FamilyKind::Star:
      require_count(*this, 1);
      require(p[0] >= 1, *this, "n must be >= 1");
      break;
    case FamilyKind::Cycle:
      require_count(*this, 1);
      require(p[0] >= 3, *this, "n must be >= 3");
      break;
    case FamilyKind::CompleteMultipartite:
    case FamilyKind::Rook:
    case FamilyKind::Threshold:
      require(!p.empty(), *this, "expected at least one parameter");
      require(all_at_least(1), *this, "parameters must be >= 1");
      break;
    case FamilyKind::Hamming:
      require_count(*this, 2);
      require(all_at_least(1), *this, "k and n must be >= 1");
      break;
    case FamilyKind::Lollipop:
      require_count(*this, 2);
      require(p[0] >= 4 && p[1] >= 1, *this, "requires n >= 4 and k >= 1");
      break;
    case FamilyKind::Barbell:
      require_count(*this, 3);
      require(p[0] >= 4 && p[2] >= 4 && p[1] >= 1, *this,
              "requires n, m >= 4 and k >= 1");
      break;
    case FamilyKind::DoubleStar:
      require_count(*this, 2);
      require(all_at_least(1), *this, "k and l must be >= 1");
      break;
    case FamilyKind::Cone:
    case FamilyKind::DoubleCone:
      require(p.empty(), *this, "takes only a base graph");
      require(base != nullptr && base->order() >= 1, *this, "base graph must be nonempty");
      break;
    case FamilyKind::CompleteJoin:
    case FamilyKind::EmptyJoin:
      require_count(*this, 1);
      require(p[0] >= 1, *this, "m must be >= 1");
      require(base != nullptr && base->order() >= 1, *this, "base graph must be nonempty");
      break;
    case FamilyKind::XTail:
    case FamilyKind::YTail:
      require_count(*this, 3);
      require(p[0] >= 3 && p[1] >= 3 && p[2] >= 0, *this,
              "requires n, m >= 3 and k >= 0");
      break;
  }
}

std::string FamilySpec::to_string() const {
  std::string out(qwsed::to_string(kind));
  if (kind == FamilyKind::DoubleCone) {
    out += connected ? ":connected" : ":disconnected";
  }
  if (!params.empty()) {
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(params[i]);
    }
  }
  if (base) out += ":" + base_name;
  return out;
}

namespace {

void attach_base(FamilySpec& spec, std::string_view text) {
  if (text.empty()) throw InvalidInput("family: missing base graph");
  if (text.front() == '@') {
    const std::string path(text.substr(1));
    spec.base = std::make_shared<const WeightedGraph>(read_graph_file(path));
  } else {
    spec.base = std::make_shared<const WeightedGraph>(build_family(parse_family(text)));
  }
  spec.base_name = std::string(text);
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput("family spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  const auto it = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                               [name](const KindName& kn) { return kn.name == name; });
  if (it == std::end(kKindNames)) {
    throw InvalidInput("unknown family '" + std::string(name) + "'");
  }

  FamilySpec spec;
  spec.kind = it->kind;
  switch (spec.kind) {
    case FamilyKind::Cone:
      attach_base(spec, rest);
      break;
    case FamilyKind::DoubleCone: {
      const auto c2 = rest.find(':');
      const std::string_view mode = rest.substr(0, c2);
      if (mode == "connected") {
        spec.connected = true;
      } else if (mode == "disconnected") {
        spec.connected = false;
      } else {
        throw InvalidInput("doublecone mode must be connected or disconnected");
      }
      if (c2 == std::string_view::npos) throw InvalidInput("doublecone: missing base graph");
      attach_base(spec, rest.substr(c2 + 1));
      break;
    }
    case FamilyKind::CompleteJoin:
    case FamilyKind::EmptyJoin: {
      const auto c2 = rest.find(':');
      if (c2 == std::string_view::npos) throw InvalidInput("join family: missing base graph");
      spec.params = {parse_int(rest.substr(0, c2), text)};
      attach_base(spec, rest.substr(c2 + 1));
      break;
    }
    case FamilyKind::Rook:
      if (rest.find('=') != std::string_view::npos) {
        long long k = -1;
        long long n = -1;
        for (auto item : split(rest, ',')) {
          const auto eq = item.find('=');
          if (eq == std::string_view::npos) throw InvalidInput("rook: mixed keyed and positional parameters");
          const auto key = item.substr(0, eq);
          const long long value = parse_int(item.substr(eq + 1), text);
          if (key == "k") {
            k = value;
          } else if (key == "n") {
            n = value;
          } else {
            throw InvalidInput("rook: unknown key '" + std::string(key) + "'");
          }
        }
        if (k < 0 || n < 0) throw InvalidInput("rook: keyed form needs k= and n=");
        spec.kind = FamilyKind::Hamming;
        spec.params = {k, n};
        break;
      }
      spec.params = parse_list(rest, text);
      break;
    default:
      spec.params = parse_list(rest, text);
      break;
  }
  spec.validate();
  return spec;
}

WeightedGraph build_family(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Complete:
      return complete_graph(as_size(p[0]));
    case FamilyKind::Empty:
      return empty_graph(as_size(p[0]));
    case FamilyKind::Path:
      return path_graph(as_size(p[0]));
    case FamilyKind::Cycle:
      return cycle_graph(as_size(p[0]));
    case FamilyKind::Star:
      return star_graph(as_size(p[0]));
    case FamilyKind::CompleteMultipartite: {
      WeightedGraph g = empty_graph(as_size(p[0]));
      for (std::size_t i = 1; i < p.size(); ++i) g = join(g, empty_graph(as_size(p[i])));
      return g;
    }
    case FamilyKind::Rook: {
      WeightedGraph g = complete_graph(as_size(p[0]));
      for (std::size_t i = 1; i < p.size(); ++i) {
        g = cartesian_product(g, complete_graph(as_size(p[i])));
      }
      return g;
    }
    case FamilyKind::Hamming: {
      const WeightedGraph kn = complete_graph(as_size(p[1]));
      WeightedGraph g = kn;
      for (long long i = 1; i < p[0]; ++i) g = cartesian_product(g, kn);
      return g;
    }
    case FamilyKind::Lollipop: {
      const TailAttachment tail{0, as_size(p[1])};
      return attach_tails(complete_graph(as_size(p[0])), std::span(&tail, 1));
    }
    case FamilyKind::Barbell: {
      const std::size_t n = as_size(p[0]);
      GraphBuilder b(disjoint_union(complete_graph(n), complete_graph(as_size(p[2]))));
      VertexId prev = 0;
      for (long long i = 0; i < p[1]; ++i) {
        const VertexId next = b.add_vertex();
        b.add_edge(prev, next);
        prev = next;
      }
      b.add_edge(prev, n);
      return b.build();
    }
    case FamilyKind::DoubleStar: {
      const std::size_t k = as_size(p[0]);
      const std::size_t l = as_size(p[1]);
      GraphBuilder b(k + l + 2);
      const VertexId u = k;
      const VertexId v = k + 1;
      for (VertexId i = 0; i < k; ++i) b.add_edge(i, u);
      b.add_edge(u, v);
      for (VertexId i = 0; i < l; ++i) b.add_edge(v, k + 2 + i);
      return b.build();
    }
    case FamilyKind::Threshold: {
      WeightedGraph g = empty_graph(as_size(p[0]));
      for (std::size_t i = 1; i < p.size(); ++i) {
        if (i % 2 == 1) {
          g = join(g, complete_graph(as_size(p[i])));
        } else {
          g = disjoint_union(g, empty_graph(as_size(p[i])));
        }
      }
      return g;
    }
    case FamilyKind::Cone:
      return join(complete_graph(1), *spec.base);
    case FamilyKind::DoubleCone:
      return join(spec.connected ? complete_graph(2) : empty_graph(2), *spec.base);
    case FamilyKind::CompleteJoin:
      return join(complete_graph(as_size(p[0])), *spec.base);
    case FamilyKind::EmptyJoin:
      return join(empty_graph(as_size(p[0])), *spec.base);
    case FamilyKind::XTail:
    case FamilyKind::YTail: {
      const std::size_t n = as_size(p[0]);
      const std::size_t m = as_size(p[1]);
      const WeightedGraph core = join(complete_graph(n), empty_graph(m));
      if (p[2] == 0) return core;
      std::vector<TailAttachment> tails;
      const VertexId first = spec.kind == FamilyKind::XTail ? n : 0;
      const std::size_t count = spec.kind == FamilyKind::XTail ? m : n;
      for (std::size_t i = 0; i < count; ++i) tails.push_back({first + i, as_size(p[2])});
      return attach_tails(core, tails);
    }
  }
  throw InvalidInput("unhandled family kind");
}

namespace {

struct RoleName {
  VertexRole role;
  std::string_view name;
};

constexpr RoleName kRoleNames[] = {
    {VertexRole::Any, "any"},         {VertexRole::Apex, "apex"},
    {VertexRole::Base, "base"},       {VertexRole::Center, "center"},
    {VertexRole::Leaf, "leaf"},       {VertexRole::Internal, "internal"},
    {VertexRole::Clique, "clique"},   {VertexRole::Independent, "independent"},
    {VertexRole::Tail, "tail"},       {VertexRole::Attachment, "attachment"},
};

}  // namespace

std::string_view to_string(VertexRole role) {
  for (const auto& rn : kRoleNames) {
    if (rn.role == role) return rn.name;
  }
  return "unknown";
}

std::optional<VertexRole> parse_role(std::string_view text) {
  if (text == "centre") return VertexRole::Center;
  for (const auto& rn : kRoleNames) {
    if (rn.name == text) return rn.role;
  }
  return std::nullopt;
}

VertexRole role_of(const FamilySpec& spec, VertexId u) {
  const std::size_t order = member_order(spec);
  if (u >= order) throw InvalidInput("vertex " + std::to_string(u) + " out of range");
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Complete:
    case FamilyKind::Empty:
    case FamilyKind::Cycle:
    case FamilyKind::Rook:
    case FamilyKind::Hamming:
      return VertexRole::Any;
    case FamilyKind::Path:
      if (order == 1) return VertexRole::Any;
      return (u == 0 || u + 1 == order) ? VertexRole::Leaf : VertexRole::Internal;
    case FamilyKind::Star:
      return u == 0 ? VertexRole::Center : VertexRole::Leaf;
    case FamilyKind::DoubleStar: {
      const VertexId k = as_size(p[0]);
      return (u == k || u == k + 1) ? VertexRole::Internal : VertexRole::Leaf;
    }
    case FamilyKind::CompleteMultipartite:
      return VertexRole::Independent;
    case FamilyKind::Threshold: {
      std::size_t end = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        end += as_size(p[i]);
        if (u < end) return i % 2 == 1 ? VertexRole::Clique : VertexRole::Independent;
      }
      return VertexRole::Any;
    }
    case FamilyKind::Cone:
      return u == 0 ? VertexRole::Apex : VertexRole::Base;
    case FamilyKind::DoubleCone:
      return u < 2 ? VertexRole::Apex : VertexRole::Base;
    case FamilyKind::CompleteJoin:
      return u < as_size(p[0]) ? VertexRole::Clique : VertexRole::Base;
    case FamilyKind::EmptyJoin:
      return u < as_size(p[0]) ? VertexRole::Independent : VertexRole::Base;
    case FamilyKind::Lollipop:
      if (u == 0) return VertexRole::Attachment;
      return u < as_size(p[0]) ? VertexRole::Clique : VertexRole::Tail;
    case FamilyKind::Barbell:
      if (u == 0 || u == as_size(p[0])) return VertexRole::Attachment;
      return u < as_size(p[0] + p[2]) ? VertexRole::Clique : VertexRole::Tail;
    case FamilyKind::XTail:
    case FamilyKind::YTail:
      if (u < as_size(p[0])) return VertexRole::Clique;
      return u < as_size(p[0] + p[1]) ? VertexRole::Independent : VertexRole::Tail;
  }
  return VertexRole::Any;
}

std::optional<VertexId> first_vertex_with_role(const FamilySpec& spec, VertexRole role) {
  const std::size_t order = member_order(spec);
  for (VertexId u = 0; u < order; ++u) {
    if (role == VertexRole::Any || role_of(spec, u) == role) return u;
  }
  return std::nullopt;
}

std::vector<ScanMember> expand_scan(std::string_view text) {
  static const std::regex range(R"((\d+)\.\.(\d+))");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_search(s, m, range)) return {{0, s}};
  const long long lo = std::stoll(m[1].str());
  const long long hi = std::stoll(m[2].str());
  if (hi < lo) throw InvalidInput("empty range " + m[0].str());
  std::vector<ScanMember> out;
  for (long long v = lo; v <= hi; ++v) {
    out.push_back({v, m.prefix().str() + std::to_string(v) + m.suffix().str()});
  }
  return out;
}

std::vector<FamilySpec> product_factors(const FamilySpec& spec) {
  std::vector<FamilySpec> out;
  auto complete = [](long long n) {
    FamilySpec f;
    f.kind = FamilyKind::Complete;
    f.params = {n};
    return f;
  };
  if (spec.kind == FamilyKind::Rook) {
    for (long long n : spec.params) out.push_back(complete(n));
  } else if (spec.kind == FamilyKind::Hamming) {
    for (long long i = 0; i < spec.params[0]; ++i) out.push_back(complete(spec.params[1]));
  }
  return out;
}

}  // namespace qwsed
