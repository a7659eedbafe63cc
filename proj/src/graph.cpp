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

#include "flexcut/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>

#include "flexcut/errors.hpp"

namespace flexcut {

LabeledMultigraph::LabeledMultigraph(int node_count, std::vector<EdgeSpec> edges)
    : n_(node_count) {
  if (n_ < 2) throw ContractError("graph needs at least 2 nodes");
  if (n_ > kMaxNodes) {
    throw ContractError("graph has " + std::to_string(n_) + " nodes, limit is " +
                        std::to_string(kMaxNodes));
  }
  if (static_cast<int>(edges.size()) > kMaxEdges) {
    throw ContractError("graph has " + std::to_string(edges.size()) +
                        " edges, limit is " + std::to_string(kMaxEdges));
  }
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    const int id = static_cast<int>(edges_.size());
    if (spec.u < 0 || spec.u >= n_ || spec.v < 0 || spec.v >= n_) {
      throw ContractError("edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (spec.u == spec.v) throw ContractError("edge " + std::to_string(id) + " is a loop");
    if (spec.cost < 0) {
      throw ContractError("edge " + std::to_string(id) + " has negative cost");
    }
    if (spec.safety == Safety::kUnsafe) unsafe_.set(id);
    edges_.push_back(Edge{id, spec.u, spec.v, std::move(spec.cost), spec.safety});
  }
}

Rational LabeledMultigraph::cost_of(const EdgeSet& f) const {
  Rational total = 0;
  for (int id : f.members()) total += edges_[id].cost;
  return total;
}

NodeShore::NodeShore(int node_count, const NodeSet& side) : n_(node_count) {
  const NodeSet all = NodeSet::prefix(node_count);
  if (side.none() || !side.is_subset_of(all) || side == all) {
    throw ContractError("shore must be a nonempty proper subset of V, got " +
                        format_node_set(side));
  }
  canonical_ = canonical_side(side, node_count);
}

EdgeSet boundary(const LabeledMultigraph& g, const NodeSet& s) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if (s.test(e.u) != s.test(e.v)) out.set(e.id);
  }
  return out;
}

EdgeSet cut_edges(const LabeledMultigraph& g, const NodeSet& s) {
  const NodeSet all = g.all_nodes();
  if (s.none() || !s.is_subset_of(all) || s == all) {
    throw ContractError("cut_edges: shore must be a nonempty proper subset of V, got " +
                        format_node_set(s));
  }
  return boundary(g, s);
}

int cut_size(const LabeledMultigraph& g, const EdgeSet& f, const NodeSet& s) {
  return (boundary(g, s) & f).count();
}

EdgeSet between(const LabeledMultigraph& g, const NodeSet& x, const NodeSet& y) {
  if (x.intersects(y)) {
    throw ContractError("between: sets overlap (" + format_node_set(x) + ", " +
                        format_node_set(y) + ")");
  }
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if ((x.test(e.u) && y.test(e.v)) || (x.test(e.v) && y.test(e.u))) out.set(e.id);
  }
  return out;
}

namespace {

// Unit-capacity residual network for an undirected multigraph. An undirected
// edge becomes a pair of opposite arcs of capacity 1 that are each other's
// reverse.
class UnitFlowNetwork {
 public:
  UnitFlowNetwork(const LabeledMultigraph& g, const EdgeSet& f)
      : head_(g.node_count()) {
    for (int id : f.members()) {
      const auto& e = g.edge(id);
      add_arc_pair(e.u, e.v);
    }
  }

  int max_flow(int source, int sink) {
    std::fill(flow_.begin(), flow_.end(), 0);
    int total = 0;
    std::vector<int> parent(head_.size());
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = -2;
      std::queue<int> q;
      q.push(source);
      while (!q.empty() && parent[sink] == -1) {
        const int x = q.front();
        q.pop();
        for (int a : head_[x]) {
          if (residual(a) > 0 && parent[to_[a]] == -1) {
            parent[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (parent[sink] == -1) {
        reached_.clear();
        for (std::size_t x = 0; x < parent.size(); ++x) {
          if (parent[x] != -1) reached_.push_back(static_cast<int>(x));
        }
        return total;
      }
      for (int x = sink; x != source; x = to_[parent[x] ^ 1]) {
        flow_[parent[x]] += 1;
        flow_[parent[x] ^ 1] -= 1;
      }
      ++total;
    }
  }

  // Nodes on the source side of the last computed minimum cut.
  const std::vector<int>& source_side() const { return reached_; }

 private:
  void add_arc_pair(int u, int v) {
    const int a = static_cast<int>(to_.size());
    to_.push_back(v);
    to_.push_back(u);
    flow_.push_back(0);
    flow_.push_back(0);
    head_[u].push_back(a);
    head_[v].push_back(a + 1);
  }
  // Both arcs have capacity 1; a pair's flows always sum to zero.
  int residual(int a) const { return 1 - flow_[a]; }

  std::vector<std::vector<int>> head_;
  std::vector<int> reached_;
  std::vector<int> to_;
  std::vector<int> flow_;
};

}  // namespace

MinCut minimum_cut(const LabeledMultigraph& g, const EdgeSet& f) {
  UnitFlowNetwork net(g, f);
  MinCut best{std::numeric_limits<int>::max(), {}};
  for (int t = 1; t < g.node_count() && best.value > 0; ++t) {
    const int flow = net.max_flow(0, t);
    if (flow < best.value) {
      best.value = flow;
      NodeSet reached;
      for (int x : net.source_side()) reached.set(x);
      // The source side holds node 0; report the canonical side.
      best.side = g.all_nodes() - reached;
    }
  }
  return best;
}

int edge_connectivity(const LabeledMultigraph& g, const EdgeSet& f) {
  return minimum_cut(g, f).value;
}

int edge_connectivity_exhaustive(const LabeledMultigraph& g, const EdgeSet& f) {
  const int n = g.node_count();
  if (n > 20) throw BudgetError("exhaustive connectivity limited to n <= 20");
  int best = std::numeric_limits<int>::max();
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const NodeSet s = NodeSet::from_word(mask << 1);
    best = std::min(best, cut_size(g, f, s));
  }
  return best;
}

IdentityReport counting_identities_check(const LabeledMultigraph& g, const EdgeSet& f,
                                         const NodeSet& a, const NodeSet& b) {
  const NodeSet all = g.all_nodes();
  for (const NodeSet* s : {&a, &b}) {
    if (s->none() || *s == all) {
      throw ContractError("counting identities need nonempty proper shores");
    }
  }
  const NodeSet inter = a & b;
  const NodeSet uni = a | b;
  const NodeSet a_only = a - b;
  const NodeSet b_only = b - a;
  const NodeSet outside = all - uni;
  auto d = [&](const NodeSet& s) { return cut_size(g, f, s); };
  auto e = [&](const NodeSet& x, const NodeSet& y) { return (between(g, x, y) & f).count(); };

  IdentityReport r;
  r.pair_rhs = d(a) + d(b);
  r.union_inter_lhs = d(uni) + d(inter) + 2 * e(a_only, b_only);
  r.diff_lhs = d(a_only) + d(b_only) + 2 * e(inter, outside);
  r.mixed_lhs = d(a_only) + d(inter);
  r.mixed_rhs = d(a) + 2 * e(a_only, inter);
  return r;
}

namespace {
template <typename Bits>
std::string format_bits(const Bits& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}
}  // namespace

std::string format_node_set(const NodeSet& s) { return format_bits(s); }
std::string format_edge_set(const EdgeSet& s) { return format_bits(s); }

}  // namespace flexcut
