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

#include "qwsed/report.hpp"

namespace qwsed {

Json to_json(const SedentaryCertificate& c) {
  Json j;
  j["kind"] = std::string(to_string(c.kind));
  j["S"] = c.subset;
  j["S_eigenvalues"] = c.subset_eigenvalues;
  j["a"] = c.a;
  j["bound"] = c.bound;
  j["equality_times"] = c.equality_times;
  j["analytic"] = c.analytic;
  j["claims_sedentary"] = c.claims_sedentary;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const MinimizationResult& m) {
  Json j;
  j["m*"] = m.minimum;
  j["t*"] = m.argmin;
  j["window"] = m.window;
  j["certified"] = m.certified;
  j["grid"] = m.grid;
  j["refinements"] = m.refinements;
  j["period"] = m.period ? Json(*m.period) : Json(nullptr);
  j["attainment_times"] = m.attainment_times;
  return j;
}

Json to_json(const PeriodicityInfo& p) {
  Json j;
  j["periodic"] = p.periodic;
  j["method"] = std::string(to_string(p.method));
  if (p.periodic) {
    j["period"] = p.period;
    j["unit"] = p.unit;
    j["offsets"] = p.offsets;
  }
  return j;
}

Json to_json(const SedentaryReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["matrix"] = r.kind.to_string();
  j["vertex"] = r.vertex;
  j["classification"] = std::string(to_string(r.classification));
  j["C"] = r.C;
  j["tight_time"] = r.tight_time ? Json(*r.tight_time) : Json(nullptr);
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  j["oracle"] = r.oracle ? to_json(*r.oracle) : Json(nullptr);
  if (r.periodicity) j["periodicity"] = to_json(*r.periodicity);
  if (r.pst) {
    j["pst"] = {{"target", r.pst->target},
                {"time", r.pst->time},
                {"magnitude", r.pst->magnitude},
                {"proof", r.pst_proof}};
  }
  j["warnings"] = r.warnings;
  return j;
}

Json spectral_json(const WeightedGraph& g, const SpectralDecomposition& d) {
  Json j;
  j["order"] = d.order();
  j["matrix"] = d.kind().to_string();
  j["eigenvalues"] = d.eigenvalues();
  j["multiplicities"] = d.multiplicities();
  Json supports = Json::array();
  for (VertexId u = 0; u < d.order(); ++u) {
    const EigenvalueSupport s = support(d, u);
    supports.push_back({{"vertex", u}, {"indices", s.indices}, {"weights", s.weights}});
  }
  j["supports"] = std::move(supports);
  Json twins = Json::array();
  for (const TwinSet& t : find_twin_sets(g, d.kind())) {
    twins.push_back({{"vertices", t.vertices}, {"omega", t.omega}, {"eta", t.eta},
                     {"theta", t.theta}});
  }
  j["twin_classes"] = std::move(twins);
  std::vector<std::vector<VertexId>> classes;
  for (VertexId u = 0; u < d.order(); ++u) {
    bool placed = false;
    for (auto& c : classes) {
      if (are_cospectral(d, c.front(), u)) {
        c.push_back(u);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({u});
  }
  j["cospectral_classes"] = classes;
  return j;
}

}  // namespace qwsed
