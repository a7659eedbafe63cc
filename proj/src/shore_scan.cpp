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

#include "flexcut/shore_scan.hpp"

#include "flexcut/errors.hpp"

namespace flexcut {

ShoreScanner::ShoreScanner(const LabeledMultigraph& g, const EdgeSet& f, int max_nodes)
    : n_(g.node_count()) {
  if (n_ > std::min(max_nodes, 40)) {
    throw BudgetError("exhaustive shore enumeration limited to n <= " +
                      std::to_string(std::min(max_nodes, 40)) + ", graph has n = " +
                      std::to_string(n_));
  }
  for (int id : f.members()) {
    const auto& e = g.edge(id);
    u_.push_back(static_cast<std::uint8_t>(e.u));
    v_.push_back(static_cast<std::uint8_t>(e.v));
    unsafe_.push_back(e.unsafe() ? 1 : 0);
  }
}

int ShoreScanner::min_total(ExecutionMode mode) const {
  const auto count = static_cast<std::int64_t>(shore_count());
  int best = std::numeric_limits<int>::max();
  if (mode == ExecutionMode::kSerial) {
    for (std::int64_t k = 0; k < count; ++k) {
      best = std::min(best, stats(mask_at(static_cast<std::uint64_t>(k))).total);
    }
    return best;
  }
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t k = 0; k < count; ++k) {
    best = std::min(best, stats(mask_at(static_cast<std::uint64_t>(k))).total);
  }
  return best;
}

}  // namespace flexcut
