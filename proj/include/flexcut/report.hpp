// Copyright 2026 The flexcut Authors.
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

// JSON views of results. Rationals are "num/den" strings, node and edge sets
// are sorted id arrays, and keys keep insertion order.

#ifndef FLEXCUT_REPORT_HPP_
#define FLEXCUT_REPORT_HPP_

#include <json.hpp>

#include "flexcut/counterexample.hpp"
#include "flexcut/exact.hpp"
#include "flexcut/pipeline.hpp"

namespace flexcut {

using Json = nlohmann::ordered_json;

Json to_json(const NodeSet& s);
Json to_json(const EdgeSet& s);
Json to_json(const Rational& r);
Json to_json(const CertificateReport& r);
Json to_json(const PrimalDualTrace& trace);
Json to_json(const PipelineResult& r);
Json to_json(const GapRow& row);
Json to_json(const ExactSolution& s);

}  // namespace flexcut

#endif  // FLEXCUT_REPORT_HPP_
