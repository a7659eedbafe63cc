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

#include "flexcut/pipeline.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "flexcut/errors.hpp"

namespace flexcut {

const char* to_string(Stage1Mode mode) {
  return mode == Stage1Mode::kExact ? "exact" : "heuristic";
}

const char* to_string(ParityBranch branch) {
  return branch == ParityBranch::kEven ? "even" : "odd";
}

EdgeSet stage1_p1fgc(const FgcInstance& inst, Stage1Mode mode, const SolveBudget& budget,
                     const ScanOptions& scan) {
  const FgcInstance p1{inst.graph, inst.p, 1};
  if (auto r = is_feasible(p1, inst.graph.all_edges(), scan); !r.feasible) {
    throw InfeasibleError("instance is not (p,1)-feasible: " + format_witness(*r.witness));
  }
  if (mode == Stage1Mode::kExact) return exact_min_cost_feasible(p1, budget).edges;

  std::vector<int> order(inst.graph.edge_count());
  for (int i = 0; i < inst.graph.edge_count(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.graph.edge(a).cost > inst.graph.edge(b).cost;
  });
  EdgeSet kept = inst.graph.all_edges();
  for (int id : order) {
    EdgeSet without = kept;
    without.reset(id);
    if (is_feasible(p1, without, scan).feasible) kept = without;
  }
  return kept;
}

namespace {

std::vector<EdgeSet> p1_samples(const PrimalDualTrace& trace, int random_count,
                                std::uint64_t seed) {
  std::vector<EdgeSet> samples;
  EdgeSet prefix;
  samples.push_back(prefix);
  for (int e : trace.added) {
    prefix.set(e);
    samples.push_back(prefix);
  }
  samples.push_back(trace.final_edges);
  const auto pool = trace.candidates.members();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < random_count && !pool.empty(); ++s) {
    EdgeSet f;
    for (int e : pool) {
      if (coin(rng)) f.set(e);
    }
    samples.push_back(f);
  }
  return samples;
}

}  // namespace

PipelineResult solve_p2fgc(const FgcInstance& inst, const PipelineOptions& opts) {
  if (inst.q != 2) throw ContractError("solve_p2fgc needs q = 2");
  const auto& g = inst.graph;
  if (g.node_count() > opts.scan.n_max) {
    throw BudgetError("deficient-cut enumeration needs n <= " + std::to_string(opts.scan.n_max));
  }
  if (auto r = is_feasible(inst, g.all_edges(), opts.scan); !r.feasible) {
    throw InfeasibleError("instance is not (p,2)-feasible: " + format_witness(*r.witness));
  }

  PipelineResult out;
  out.parity_branch = inst.p % 2 == 0 ? ParityBranch::kEven : ParityBranch::kOdd;
  out.stage1_edges = stage1_p1fgc(inst, opts.stage1, opts.budget, opts.scan);
  out.stage1_cost = g.cost_of(out.stage1_edges);

  out.deficient = deficient_cuts(inst, out.stage1_edges, opts.scan);
  auto& stats = out.family_stats;
  stats.deficient_count = out.deficient.size();
  const PairCheck unc = check_uncrossable(out.deficient, opts.scan.mode);
  stats.uncrossable = unc.holds;
  stats.uncrossable_counterexample = unc.counterexample;
  stats.weakly_uncrossable = check_weakly_uncrossable(out.deficient, opts.scan.mode).holds;
  if (out.parity_branch == ParityBranch::kEven && !stats.uncrossable) {
    throw CertificateError("deficient family of an even-p instance is not uncrossable: " +
                           format_pair(*unc.counterexample));
  }
  if (out.parity_branch == ParityBranch::kOdd && !stats.weakly_uncrossable) {
    throw CertificateError("deficient family of an odd-p instance is not weakly uncrossable");
  }

  const FamilyOracle oracle(g, out.deficient);
  const EdgeSet candidates = g.all_edges() - out.stage1_edges;
  PrimalDualResult run = run_primal_dual(g, oracle, candidates);
  out.augmentation_edges = run.edges;
  out.augmentation_cost = g.cost_of(run.edges);
  out.total_cost = out.stage1_cost + out.augmentation_cost;

  const FamilyClass cls = out.parity_branch == ParityBranch::kEven
                              ? FamilyClass::kUncrossable
                              : FamilyClass::kWeaklyUncrossableP1;
  CertificateOptions copts;
  copts.check_witnesses = opts.check_witnesses && out.parity_branch == ParityBranch::kOdd;
  out.certificates = verify_certificates(g, oracle, run, cls, copts);

  if (out.parity_branch == ParityBranch::kOdd) {
    const auto samples = p1_samples(run.trace, opts.p1_random_samples, opts.p1_seed);
    stats.p1 = check_property_P1(out.deficient, g, samples, opts.scan.mode);
    if (!stats.p1->holds) {
      const auto& cx = *stats.p1->counterexample;
      out.certificates.failures.push_back(
          "property P1 fails: S1=" + format_node_set(cx.s1) + " S2=" + format_node_set(cx.s2) +
          " C=" + format_node_set(cx.c) + " leftover=" + format_node_set(cx.leftover));
    }
  }
  out.trace = std::move(run.trace);

  out.final_feasible = is_feasible(inst, out.edges(), opts.scan).feasible;
  if (!out.final_feasible) out.certificates.failures.push_back("union is not (p,2)-feasible");
  if (opts.strict) enforce(out.certificates);
  return out;
}

}  // namespace flexcut
