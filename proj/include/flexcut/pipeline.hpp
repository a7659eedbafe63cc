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

// Two-stage (p,2) solver: a (p,1)-feasible F1, then primal-dual augmentation
// of the cuts F1 leaves deficient.

#ifndef FLEXCUT_PIPELINE_HPP_
#define FLEXCUT_PIPELINE_HPP_

#include <cstdint>
#include <optional>

#include "flexcut/cut_family.hpp"
#include "flexcut/exact.hpp"
#include "flexcut/family.hpp"
#include "flexcut/fgc.hpp"
#include "flexcut/primal_dual.hpp"

namespace flexcut {

enum class Stage1Mode { kExact, kHeuristic };
enum class ParityBranch { kEven, kOdd };

const char* to_string(Stage1Mode mode);
const char* to_string(ParityBranch branch);

// HEURISTIC: start from E and drop edges in decreasing cost (ties by id)
// while (p,1)-feasibility survives. No approximation guarantee.
EdgeSet stage1_p1fgc(const FgcInstance& inst, Stage1Mode mode, const SolveBudget& budget = {},
                     const ScanOptions& scan = {});

struct FamilyStats {
  std::size_t deficient_count = 0;
  bool uncrossable = false;
  bool weakly_uncrossable = false;
  std::optional<std::pair<NodeSet, NodeSet>> uncrossable_counterexample;
  // Odd p only.
  std::optional<P1Check> p1;
};

struct PipelineOptions {
  Stage1Mode stage1 = Stage1Mode::kExact;
  SolveBudget budget{};
  ScanOptions scan{};
  // Certificate failures throw when strict, and are only reported otherwise.
  bool strict = true;
  bool check_witnesses = true;
  int p1_random_samples = 100;
  std::uint64_t p1_seed = 1;
};

struct PipelineResult {
  EdgeSet stage1_edges;
  EdgeSet augmentation_edges;
  Rational stage1_cost;
  Rational augmentation_cost;
  Rational total_cost;
  ParityBranch parity_branch = ParityBranch::kEven;
  CutFamily deficient{2};
  FamilyStats family_stats;
  PrimalDualTrace trace;
  CertificateReport certificates;
  bool final_feasible = false;

  EdgeSet edges() const { return stage1_edges | augmentation_edges; }
};

// Requires inst.q == 2 and node_count <= scan.n_max.
PipelineResult solve_p2fgc(const FgcInstance& inst, const PipelineOptions& opts = {});

}  // namespace flexcut

#endif  // FLEXCUT_PIPELINE_HPP_
