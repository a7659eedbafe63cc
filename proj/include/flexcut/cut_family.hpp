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

#ifndef FLEXCUT_CUT_FAMILY_HPP_
#define FLEXCUT_CUT_FAMILY_HPP_

#include <span>
#include <unordered_set>
#include <vector>

#include "flexcut/bits.hpp"

namespace flexcut {

// Explicit, complement-closed family of cuts over V = {0..n-1}.
//
// Stored as canonical shores (side without node 0) in shore_order. The
// membership function h answers for either orientation: h(S) = h(V \ S),
// and h(∅) = h(V) = 0.
class CutFamily {
 public:
  explicit CutFamily(int node_count) : n_(node_count) {}

  // Accepts shores in any orientation; duplicates collapse. Throws
  // ContractError on ∅, V, or members outside V.
  CutFamily(int node_count, std::span<const NodeSet> shores);

  int node_count() const { return n_; }
  std::size_t size() const { return shores_.size(); }
  bool empty() const { return shores_.empty(); }
  std::span<const NodeSet> shores() const { return shores_; }
  NodeSet all_nodes() const { return NodeSet::prefix(n_); }

  bool h(const NodeSet& s) const;

  // Both orientations of every member, in shore_order.
  std::vector<NodeSet> oriented_members() const;

  friend bool operator==(const CutFamily& a, const CutFamily& b) {
    return a.n_ == b.n_ && a.shores_ == b.shores_;
  }

 private:
  int n_;
  std::vector<NodeSet> shores_;
  std::unordered_set<NodeSet> index_;
};

// Complement closure of an arbitrary list of shores.
CutFamily close_complements(std::span<const NodeSet> shores, int node_count);

}  // namespace flexcut

#endif  // FLEXCUT_CUT_FAMILY_HPP_
