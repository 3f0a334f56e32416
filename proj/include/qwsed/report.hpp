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

#ifndef QWSED_REPORT_HPP_
#define QWSED_REPORT_HPP_

#include "json.hpp"

#include "qwsed/graph.hpp"
#include "qwsed/sedentary.hpp"
#include "qwsed/spectral.hpp"
#include "qwsed/walk.hpp"

namespace qwsed {

using Json = nlohmann::ordered_json;

Json to_json(const SedentaryCertificate& c);
Json to_json(const MinimizationResult& m);
Json to_json(const PeriodicityInfo& p);
Json to_json(const SedentaryReport& r);

// Eigenvalues, multiplicities, per-vertex support weights, twin classes and
// cospectral classes.
Json spectral_json(const WeightedGraph& g, const SpectralDecomposition& d);

}  // namespace qwsed

#endif  // QWSED_REPORT_HPP_
