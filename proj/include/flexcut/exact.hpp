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

// Exact minimum-cost solvers used as ground truth.
//
// Both solvers branch on the first unsatisfied cut: any solution extending
// the current partial one must pick one of that cut's open edges, and earlier
// branches exclude the edges already tried. Optima are unique under the order
// (cost, size, sorted edge ids), so results do not depend on traversal order.

#ifndef FLEXCUT_EXACT_HPP_
#define FLEXCUT_EXACT_HPP_

#include <cstdint>
#include <string>

#include "flexcut/cut_family.hpp"
#include "flexcut/fgc.hpp"
#include "flexcut/graph.hpp"
#include "flexcut/rational.hpp"

namespace flexcut {

struct SolveBudget {
  int max_nodes = 12;
  int max_edges = 20;
  std::uint64_t max_subsets_explored = 50'000'000;

  static SolveBudget for_covers() { return SolveBudget{256, 64, 50'000'000}; }
};

struct ExactSolution {
  EdgeSet edges;
  Rational cost;
  std::uint64_t explored = 0;  // search nodes visited
};

// True when a ranks before b under (cost, size, sorted ids).
bool solution_less(const LabeledMultigraph& g, const EdgeSet& a, const EdgeSet& b);

// Minimum-cost (p,q)-feasible edge set. Throws InfeasibleError if E itself is
// infeasible, BudgetError past the budget.
ExactSolution exact_min_cost_feasible(const FgcInstance& inst, const SolveBudget& budget = {});

// Minimum-cost set of edges from `candidates` crossing every member of fam.
// Throws InfeasibleError naming an uncoverable shore, BudgetError past the
// budget (family size is capped at 10^4 distinct crossing patterns).
ExactSolution exact_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                   const EdgeSet& candidates,
                                   const SolveBudget& budget = SolveBudget::for_covers());
ExactSolution exact_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                   const SolveBudget& budget = SolveBudget::for_covers());

// Plain enumeration of all 2^m subsets; test oracle for m <= 20.
ExactSolution exhaustive_min_cost_feasible(const FgcInstance& inst);
ExactSolution exhaustive_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                        const EdgeSet& candidates);

// FNV-1a over the instance's text serialization.
std::uint64_t instance_hash(const FgcInstance& inst);

// "instance-hash optimum-cost edge-ids", e.g. "9f2c... 7 0,3,5".
std::string golden_line(const FgcInstance& inst, const ExactSolution& sol);

}  // namespace flexcut

#endif  // FLEXCUT_EXACT_HPP_
