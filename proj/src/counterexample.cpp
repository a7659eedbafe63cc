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

#include "flexcut/counterexample.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <memory>

#include "flexcut/errors.hpp"
#include "flexcut/exact.hpp"

namespace flexcut {

NodeSet CounterexampleLayout::cylinder(int i) const {
  NodeSet s;
  for (int j = 0; j <= k; ++j) s.set(c(i, j));
  return s;
}

NodeSet CounterexampleLayout::chain(int i, int j) const {
  NodeSet s;
  for (int r = 1; r <= i; ++r) s.set(t(r, j));
  return s;
}

EdgeSet CounterexampleLayout::type_a_edges() const { return EdgeSet::prefix(k * k); }

EdgeSet CounterexampleLayout::type_b_edges() const {
  return EdgeSet::prefix(edge_count()) - type_a_edges();
}

std::size_t CounterexampleLayout::generating_count() const {
  std::size_t total = k;
  for (int i = 1; i <= k; ++i) total += static_cast<std::size_t>(k) << ((i - 1) * (k + 1));
  return total;
}

Counterexample build_counterexample(int k, bool explicit_family) {
  if (k < 2) throw ContractError("counterexample needs k >= 2");
  const CounterexampleLayout L{k};
  if (L.node_count() > kMaxNodes) throw BudgetError("k too large for the node capacity");
  if (explicit_family && k > kMaxExplicitK) {
    throw BudgetError("explicit family for k=" + std::to_string(k) + " has " +
                      std::to_string(L.generating_count()) + " sets; limit is k <= " +
                      std::to_string(kMaxExplicitK));
  }

  std::vector<LabeledMultigraph::EdgeSpec> edges;
  const Rational one(1);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) edges.push_back({L.t(i, j), L.c(i, j), one, Safety::kSafe});
  }
  for (int j = 1; j <= k; ++j) edges.push_back({L.v0(), L.t(1, j), one, Safety::kSafe});
  for (int i = 1; i <= k; ++i) edges.push_back({L.v0(), L.c(i, 0), one, Safety::kSafe});

  Counterexample out{L, LabeledMultigraph(L.node_count(), std::move(edges)), {}, std::nullopt};
  if (!explicit_family) return out;

  auto& gen = out.generating;
  gen.reserve(L.generating_count());
  for (int i = 1; i <= k; ++i) gen.push_back(L.cylinder(i));
  for (int i = 1; i <= k; ++i) {
    // R(i, j): cells (i'', j'') with i'' < i, enumerated as a bitmask.
    std::vector<int> cells;
    for (int ii = 1; ii < i; ++ii) {
      for (int jj = 0; jj <= k; ++jj) cells.push_back(L.c(ii, jj));
    }
    for (int j = 1; j <= k; ++j) {
      const NodeSet base = L.chain(i, j);
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << cells.size()); ++r) {
        NodeSet s = base;
        for (std::size_t b = 0; b < cells.size(); ++b) {
          if ((r >> b) & 1U) s.set(cells[b]);
        }
        gen.push_back(s);
      }
    }
  }
  out.family.emplace(L.node_count(), gen);
  return out;
}

CounterexampleOracle::CounterexampleOracle(CounterexampleLayout layout) : layout_(layout) {
  all_ = NodeSet::prefix(layout_.node_count());
  for (int j = 1; j <= layout_.k; ++j) t_nodes_ |= layout_.chain(layout_.k, j);
}

bool CounterexampleOracle::generates(const NodeSet& s) const {
  const int k = layout_.k;
  if (s.test(CounterexampleLayout::v0())) return false;
  const NodeSet t_part = s & t_nodes_;
  if (t_part.none()) {
    for (int i = 1; i <= k; ++i) {
      if (s == layout_.cylinder(i)) return true;
    }
    return false;
  }
  for (int j = 1; j <= k; ++j) {
    for (int i = 1; i <= k; ++i) {
      if (!(t_part == layout_.chain(i, j))) continue;
      NodeSet allowed;
      for (int ii = 1; ii < i; ++ii) allowed |= layout_.cylinder(ii);
      return (s - t_part).is_subset_of(allowed);
    }
  }
  return false;
}

bool CounterexampleOracle::h(const NodeSet& s) const {
  if (s.none() || s == all_) return false;
  return generates(s) || generates(all_ - s);
}

std::vector<NodeSet> CounterexampleOracle::minimal_violated(const EdgeSet& f) const {
  const int k = layout_.k;
  const auto& L = layout_;
  std::vector<NodeSet> minimal;  // violated generating sets, inclusion-minimal
  std::vector<NodeSet> largest;  // maximal member of each violated class

  for (int i = 1; i <= k; ++i) {
    bool covered = f.test(L.edge_b_cylinder(i));
    for (int j = 1; j <= k; ++j) covered = covered || f.test(L.edge_a(i, j));
    if (!covered) {
      minimal.push_back(L.cylinder(i));
      largest.push_back(L.cylinder(i));
    }
  }
  for (int j = 1; j <= k; ++j) {
    if (f.test(L.edge_b_layer(j))) continue;
    bool first = true;
    for (int i = 1; i <= k; ++i) {
      if (f.test(L.edge_a(i, j))) continue;
      // Violated members of class (i, j) range between these two sets.
      NodeSet low = L.chain(i, j);
      NodeSet high = low;
      for (int ii = 1; ii < i; ++ii) {
        if (f.test(L.edge_a(ii, j))) low.set(L.c(ii, j));
        high.set(L.c(ii, j));
        if (!f.test(L.edge_b_cylinder(ii))) high.set(L.c(ii, 0));
        for (int jj = 1; jj <= k; ++jj) {
          if (jj != j && !f.test(L.edge_a(ii, jj))) high.set(L.c(ii, jj));
        }
      }
      // Lower classes in the same layer sit inside this one.
      if (first) minimal.push_back(low);
      first = false;
      largest.push_back(high);
    }
  }

  std::vector<NodeSet> out = minimal;
  for (const auto& x : largest) {
    const bool maximal = std::none_of(largest.begin(), largest.end(), [&x](const NodeSet& y) {
      return x.is_subset_of(y) && !(x == y);
    });
    const bool hits_all = std::all_of(minimal.begin(), minimal.end(),
                                      [&x](const NodeSet& m) { return m.intersects(x); });
    if (maximal && hits_all) out.push_back(all_ - x);
  }
  std::sort(out.begin(), out.end(), shore_order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

GapRow run_one(int k, const GapOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const bool explicit_family = k <= opts.explicit_max_k;
  const Counterexample cx = build_counterexample(k, explicit_family);
  const auto& g = cx.graph;
  std::unique_ptr<ViolationOracle> oracle;
  if (explicit_family) {
    oracle = std::make_unique<FamilyOracle>(g, *cx.family);
  } else {
    oracle = std::make_unique<CounterexampleOracle>(cx.layout);
  }

  GapRow row;
  row.k = k;
  row.implicit_oracle = !explicit_family;
  const PrimalDualResult run = run_primal_dual(g, *oracle);
  row.pd_cost = g.cost_of(run.edges);
  row.dual_sum = run.duals.sum();
  row.iterations = run.trace.iterations.size();
  for (const auto& it : run.trace.iterations) {
    if (it.epsilon > 0) row.waves.push_back(it.epsilon);
  }
  row.deleted = run.trace.deleted.size();
  row.picked_type_a = run.edges == cx.layout.type_a_edges();

  const EdgeSet b = cx.layout.type_b_edges();
  row.cover_bound = g.cost_of(b);
  row.cover_bound_feasible = oracle->minimal_violated(b).empty();
  row.ratio = row.pd_cost / row.cover_bound;
  if (explicit_family && k <= opts.exact_max_k) {
    try {
      const ExactSolution opt = exact_min_cost_cover(*cx.family, g);
      row.exact_opt = opt.cost;
      row.exact_edges = opt.edges.members();
      row.ratio = row.pd_cost / opt.cost;
    } catch (const BudgetError&) {
      // Reported against the type-B bound.
    }
  }
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<GapRow> run_gap_experiment(int k_min, int k_max, const GapOptions& opts) {
  if (k_min < 2 || k_max < k_min) throw ContractError("need 2 <= k_min <= k_max");
  const int count = k_max - k_min + 1;
  std::vector<GapRow> rows(count);
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int idx = count - 1; idx >= 0; --idx) {
    try {
      rows[idx] = run_one(k_min + idx, opts);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace flexcut
