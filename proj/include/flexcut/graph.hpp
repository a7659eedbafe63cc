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

#ifndef FLEXCUT_GRAPH_HPP_
#define FLEXCUT_GRAPH_HPP_

#include <span>
#include <string>
#include <vector>

#include "flexcut/bits.hpp"
#include "flexcut/rational.hpp"

namespace flexcut {

enum class Safety { kSafe, kUnsafe };

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  Rational cost;
  Safety safety = Safety::kSafe;

  bool unsafe() const { return safety == Safety::kUnsafe; }
};

// Loop-free multigraph whose edges carry a cost and a safe/unsafe label.
// Immutable after construction; edge ids are the dense positions 0..m-1.
class LabeledMultigraph {
 public:
  struct EdgeSpec {
    int u;
    int v;
    Rational cost;
    Safety safety;
  };

  // Throws ContractError on loops, negative costs, bad endpoints, or sizes
  // beyond kMaxNodes / kMaxEdges.
  LabeledMultigraph(int node_count, std::vector<EdgeSpec> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  NodeSet all_nodes() const { return NodeSet::prefix(n_); }
  EdgeSet all_edges() const { return EdgeSet::prefix(edge_count()); }
  const EdgeSet& unsafe_edges() const { return unsafe_; }
  EdgeSet safe_edges() const { return all_edges() - unsafe_; }

  Rational cost_of(const EdgeSet& f) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  EdgeSet unsafe_;
};

// A cut δ(S) identified by its canonical shore: the side without node 0.
class NodeShore {
 public:
  // Throws ContractError when `side` is empty or all of V.
  NodeShore(int node_count, const NodeSet& side);

  const NodeSet& canonical() const { return canonical_; }
  NodeSet complement() const { return NodeSet::prefix(n_) - canonical_; }
  int node_count() const { return n_; }

  // The orientation containing `node`.
  NodeSet side_with(int node) const {
    return canonical_.test(node) ? canonical_ : complement();
  }

  friend bool operator==(const NodeShore&, const NodeShore&) = default;

 private:
  int n_;
  NodeSet canonical_;
};

// Side of S not containing node 0. No emptiness checks.
inline NodeSet canonical_side(const NodeSet& s, int node_count) {
  return s.test(0) ? NodeSet::prefix(node_count) - s : s;
}

// δ(S): edges with exactly one endpoint in S. Throws ContractError if S is
// empty or V.
EdgeSet cut_edges(const LabeledMultigraph& g, const NodeSet& s);
inline EdgeSet cut_edges(const LabeledMultigraph& g, const NodeShore& s) {
  return cut_edges(g, s.canonical());
}

// δ(S) without the nonempty/proper precondition; δ(∅) = δ(V) = ∅.
EdgeSet boundary(const LabeledMultigraph& g, const NodeSet& s);

// |δ(S) ∩ F|, permissive like boundary().
int cut_size(const LabeledMultigraph& g, const EdgeSet& f, const NodeSet& s);

// E(X, Y). Throws ContractError when X and Y overlap.
EdgeSet between(const LabeledMultigraph& g, const NodeSet& x, const NodeSet& y);

struct MinCut {
  int value = 0;
  NodeSet side;  // canonical shore attaining the value
};

// Minimum cut of (V, F) by n-1 unit-capacity max flows from node 0.
MinCut minimum_cut(const LabeledMultigraph& g, const EdgeSet& f);

// min over proper shores S of |δ(S) ∩ F|, via n-1 unit-capacity max flows
// from node 0. Returns 0 when (V, F) is disconnected.
int edge_connectivity(const LabeledMultigraph& g, const EdgeSet& f);

// Same value by enumerating all 2^(n-1)-1 canonical shores. Test oracle;
// throws BudgetError for n > 20.
int edge_connectivity_exhaustive(const LabeledMultigraph& g, const EdgeSet& f);

struct IdentityReport {
  // Left and right hand sides of the three cut-counting identities.
  int union_inter_lhs = 0;  // |δ(A∪B)| + |δ(A∩B)| + 2|E(A\B, B\A)|
  int diff_lhs = 0;         // |δ(A\B)| + |δ(B\A)| + 2|E(A∩B, V\(A∪B))|
  int pair_rhs = 0;         // |δ(A)| + |δ(B)|
  int mixed_lhs = 0;        // |δ(A\B)| + |δ(A∩B)|
  int mixed_rhs = 0;        // |δ(A)| + 2|E(A\B, A∩B)|

  bool union_inter_holds() const { return union_inter_lhs == pair_rhs; }
  bool diff_holds() const { return diff_lhs == pair_rhs; }
  bool mixed_holds() const { return mixed_lhs == mixed_rhs; }
  bool all_hold() const { return union_inter_holds() && diff_holds() && mixed_holds(); }
};

// Evaluates the submodular counting identities for shores A, B within F.
// Throws ContractError if A or B is empty or V.
IdentityReport counting_identities_check(const LabeledMultigraph& g, const EdgeSet& f,
                                         const NodeSet& a, const NodeSet& b);

// "{0,3,5}"
std::string format_node_set(const NodeSet& s);
std::string format_edge_set(const EdgeSet& s);

}  // namespace flexcut

#endif  // FLEXCUT_GRAPH_HPP_
