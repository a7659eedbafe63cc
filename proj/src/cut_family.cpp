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

#include "flexcut/cut_family.hpp"

#include <algorithm>

#include "flexcut/errors.hpp"
#include "flexcut/graph.hpp"

namespace flexcut {

CutFamily::CutFamily(int node_count, std::span<const NodeSet> shores) : n_(node_count) {
  const NodeSet all = all_nodes();
  index_.reserve(shores.size() * 2);
  for (const auto& s : shores) {
    if (s.none() || s == all || !s.is_subset_of(all)) {
      throw ContractError("family member must be a nonempty proper subset of V, got " +
                          format_node_set(s));
    }
    NodeSet c = canonical_side(s, n_);
    if (index_.insert(c).second) shores_.push_back(c);
  }
  std::sort(shores_.begin(), shores_.end(), shore_order);
}

bool CutFamily::h(const NodeSet& s) const {
  if (s.none()) return false;
  const NodeSet all = all_nodes();
  if (s == all) return false;
  return index_.contains(canonical_side(s, n_));
}

std::vector<NodeSet> CutFamily::oriented_members() const {
  std::vector<NodeSet> out;
  out.reserve(shores_.size() * 2);
  const NodeSet all = all_nodes();
  for (const auto& s : shores_) {
    out.push_back(s);
    out.push_back(all - s);
  }
  std::sort(out.begin(), out.end(), shore_order);
  return out;
}

CutFamily close_complements(std::span<const NodeSet> shores, int node_count) {
  return CutFamily(node_count, shores);
}

}  // namespace flexcut
