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

// (p,q) flexible graph connectivity: feasibility and deficient cuts.

#ifndef FLEXCUT_FGC_HPP_
#define FLEXCUT_FGC_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flexcut/cut_family.hpp"
#include "flexcut/graph.hpp"
#include "flexcut/shore_scan.hpp"

namespace flexcut {

// An edge set F is (p,q)-feasible when (V, F \ F') is p-edge-connected for
// every F' of at most q unsafe edges.
struct FgcInstance {
  LabeledMultigraph graph;
  int p = 1;
  int q = 0;

  // Rejects p < 1, q < 0, and instances whose full edge set is not
  // (p,q)-feasible (InfeasibleError naming the witness cut).
  static FgcInstance checked(LabeledMultigraph graph, int p, int q);
};

struct DeficiencyWitness {
  NodeShore shore;
  int total_edges = 0;   // |δ(S) ∩ F|
  int unsafe_edges = 0;  // unsafe edges among them

  int safe_edges() const { return total_edges - unsafe_edges; }
};

struct FeasibilityResult {
  bool feasible = true;
  std::optional<DeficiencyWitness> witness;
};

struct ScanOptions {
  int n_max = 18;  // exhaustive shore enumeration cap
  ExecutionMode mode = ExecutionMode::kParallel;
};

// Per-cut test: a cut with s safe and u unsafe edges of F survives every
// adversarial removal iff s + max(0, u - q) >= p.
inline bool cut_survives(int safe, int unsafe, int p, int q) {
  return safe + std::max(0, unsafe - q) >= p;
}

// Shore scan when n <= n_max, otherwise removal enumeration with max flow.
// The witness is the smallest-mask failing shore on the scan path.
FeasibilityResult is_feasible(const FgcInstance& inst, const EdgeSet& f,
                              const ScanOptions& opts = {});

// Same verdict from the definition: every removal of <= q unsafe edges of F
// leaves (V, F \ F') p-edge-connected.
FeasibilityResult is_feasible_by_removal(const FgcInstance& inst, const EdgeSet& f);

// Cuts of a (p,1)-feasible F1 with exactly p+1 edges, at least 2 unsafe.
// Throws ContractError carrying the violating cut when F1 is not
// (p,1)-feasible, BudgetError when n > n_max. Ordered like CutFamily.
std::vector<DeficiencyWitness> deficient_cut_details(const FgcInstance& inst,
                                                     const EdgeSet& f1,
                                                     const ScanOptions& opts = {});

// The complement-closed family of those cuts.
CutFamily deficient_cuts(const FgcInstance& inst, const EdgeSet& f1,
                         const ScanOptions& opts = {});

// "S={1,2} total=4 unsafe=2"
std::string format_witness(const DeficiencyWitness& w);

}  // namespace flexcut

#endif  // FLEXCUT_FGC_HPP_
