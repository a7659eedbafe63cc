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

// Weakly uncrossable instance on which plain primal-dual pays k^2 while
// 2k edges suffice.
//
// Cylinders C_i = {c(i,0..k)}, layers j = 1..k each with a nested chain
// T_{1j} ⊊ ... ⊊ T_{kj} where T_{ij} = {t(1,j), ..., t(i,j)}, and a hub v0.
// Generating sets: every C_i, and T_{ij} ∪ (any union of c(i'',j'') with
// i'' < i). The family is their complement closure.
//
// Edges (unit cost), ids in this order:
//   A(i,j) = t(i,j) - c(i,j)     id (i-1)k + (j-1)
//   B(j)   = v0 - t(1,j)         id k^2 + (j-1)
//   B'(i)  = v0 - c(i,0)         id k^2 + k + (i-1)

#ifndef FLEXCUT_COUNTEREXAMPLE_HPP_
#define FLEXCUT_COUNTEREXAMPLE_HPP_

#include <optional>
#include <vector>

#include "flexcut/cut_family.hpp"
#include "flexcut/graph.hpp"
#include "flexcut/primal_dual.hpp"
#include "flexcut/rational.hpp"

namespace flexcut {

struct CounterexampleLayout {
  int k = 2;

  static constexpr int v0() { return 0; }
  int c(int i, int j) const { return 1 + (i - 1) * (k + 1) + j; }
  int t(int i, int j) const { return 1 + k * (k + 1) + (j - 1) * k + (i - 1); }
  int node_count() const { return k * (k + 1) + k * k + 1; }

  int edge_a(int i, int j) const { return (i - 1) * k + (j - 1); }
  int edge_b_layer(int j) const { return k * k + (j - 1); }
  int edge_b_cylinder(int i) const { return k * k + k + (i - 1); }
  int edge_count() const { return k * k + 2 * k; }

  NodeSet cylinder(int i) const;
  NodeSet chain(int i, int j) const;  // T_{ij}
  EdgeSet type_a_edges() const;
  EdgeSet type_b_edges() const;

  // Closed-form |generating family| = k + Σ_i k·2^{(i-1)(k+1)}.
  std::size_t generating_count() const;
};

// Largest k whose explicit family is materialized.
inline constexpr int kMaxExplicitK = 4;

struct Counterexample {
  CounterexampleLayout layout;
  LabeledMultigraph graph;
  std::vector<NodeSet> generating;  // empty unless explicit
  std::optional<CutFamily> family;  // complement-closed; explicit only
};

// k >= 2. explicit_family materializes the family and throws BudgetError
// for k > kMaxExplicitK.
Counterexample build_counterexample(int k, bool explicit_family = true);

// Answers family queries by case analysis on which edges are chosen.
class CounterexampleOracle : public ViolationOracle {
 public:
  explicit CounterexampleOracle(CounterexampleLayout layout);

  int node_count() const override { return layout_.node_count(); }
  bool h(const NodeSet& s) const override;
  std::vector<NodeSet> minimal_violated(const EdgeSet& f) const override;

 private:
  bool generates(const NodeSet& s) const;

  CounterexampleLayout layout_;
  NodeSet all_;
  NodeSet t_nodes_;
};

struct GapRow {
  int k = 0;
  bool implicit_oracle = false;
  Rational pd_cost;
  Rational dual_sum;
  std::vector<Rational> waves;  // positive ε values in iteration order
  std::size_t iterations = 0;
  std::size_t deleted = 0;
  bool picked_type_a = false;  // output is exactly the type-A edges
  Rational cover_bound;        // cost of the type-B solution, 2k
  bool cover_bound_feasible = false;
  std::optional<Rational> exact_opt;
  std::vector<int> exact_edges;
  Rational ratio;  // pd_cost over exact_opt, else over cover_bound
  double seconds = 0.0;
};

struct GapOptions {
  int explicit_max_k = kMaxExplicitK;
  int exact_max_k = 4;
};

// Distinct k run in parallel; rows come back sorted by k.
std::vector<GapRow> run_gap_experiment(int k_min, int k_max, const GapOptions& opts = {});

}  // namespace flexcut

#endif  // FLEXCUT_COUNTEREXAMPLE_HPP_
