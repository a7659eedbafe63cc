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

#include "flexcut/fgc.hpp"

#include <algorithm>

#include "flexcut/errors.hpp"

namespace flexcut {
namespace {

DeficiencyWitness witness_for(const LabeledMultigraph& g, const EdgeSet& f,
                              const NodeSet& side) {
  const EdgeSet cut = boundary(g, side) & f;
  return DeficiencyWitness{NodeShore(g.node_count(), side), cut.count(),
                           (cut & g.unsafe_edges()).count()};
}

// Calls visit(removed) for every subset of `pool` of size <= limit, smallest
// sizes first. Stops when visit returns false.
template <typename Visit>
bool for_each_small_subset(const std::vector<int>& pool, int limit, Visit visit) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start, int left) -> bool {
    EdgeSet removed;
    for (int id : pick) removed.set(id);
    if (!visit(removed)) return false;
    if (left == 0) return true;
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      const bool go_on = self(self, i + 1, left - 1);
      pick.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0, limit);
}

}  // namespace

FgcInstance FgcInstance::checked(LabeledMultigraph graph, int p, int q) {
  if (p < 1) throw ContractError("p must be >= 1");
  if (q < 0) throw ContractError("q must be >= 0");
  FgcInstance inst{std::move(graph), p, q};
  auto verdict = is_feasible(inst, inst.graph.all_edges());
  if (!verdict.feasible) {
    throw InfeasibleError("instance is not (" + std::to_string(p) + "," +
                          std::to_string(q) + ")-feasible: " +
                          format_witness(*verdict.witness));
  }
  return inst;
}

FeasibilityResult is_feasible(const FgcInstance& inst, const EdgeSet& f,
                              const ScanOptions& opts) {
  const auto& g = inst.graph;
  if (g.node_count() > opts.n_max) return is_feasible_by_removal(inst, f);

  ShoreScanner scanner(g, f, opts.n_max);
  const int p = inst.p;
  const int q = inst.q;
  auto bad = scanner.first(
      [p, q](const CutStats& s) { return !cut_survives(s.safe(), s.unsafe, p, q); },
      opts.mode);
  if (!bad) return {true, std::nullopt};
  return {false, DeficiencyWitness{NodeShore(g.node_count(), bad->shore()), bad->total,
                                   bad->unsafe}};
}

FeasibilityResult is_feasible_by_removal(const FgcInstance& inst, const EdgeSet& f) {
  const auto& g = inst.graph;
  const auto pool = (f & g.unsafe_edges()).members();
  std::optional<DeficiencyWitness> found;
  for_each_small_subset(pool, inst.q, [&](const EdgeSet& removed) {
    const MinCut cut = minimum_cut(g, f - removed);
    if (cut.value >= inst.p) return true;
    found = witness_for(g, f, cut.side);
    return false;
  });
  if (!found) return {true, std::nullopt};
  return {false, found};
}

std::vector<DeficiencyWitness> deficient_cut_details(const FgcInstance& inst,
                                                     const EdgeSet& f1,
                                                     const ScanOptions& opts) {
  const auto& g = inst.graph;
  const int p = inst.p;
  ShoreScanner scanner(g, f1, opts.n_max);

  // (p,1)-feasibility of F1. A p-cut with an unsafe edge already fails it.
  if (auto bad = scanner.first(
          [p](const CutStats& s) { return !cut_survives(s.safe(), s.unsafe, p, 1); },
          opts.mode)) {
    throw ContractError("deficient_cuts: F1 is not (" + std::to_string(p) +
                        ",1)-feasible, violating cut " +
                        format_witness(DeficiencyWitness{
                            NodeShore(g.node_count(), bad->shore()), bad->total,
                            bad->unsafe}));
  }
  auto hits = scanner.collect(
      [p](const CutStats& s) { return s.total == p + 1 && s.unsafe >= 2; }, opts.mode);

  std::vector<DeficiencyWitness> out;
  out.reserve(hits.size());
  for (const auto& s : hits) {
    out.push_back(DeficiencyWitness{NodeShore(g.node_count(), s.shore()), s.total, s.unsafe});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return shore_order(a.shore.canonical(), b.shore.canonical());
  });
  return out;
}

CutFamily deficient_cuts(const FgcInstance& inst, const EdgeSet& f1,
                         const ScanOptions& opts) {
  std::vector<NodeSet> shores;
  for (const auto& w : deficient_cut_details(inst, f1, opts)) {
    shores.push_back(w.shore.canonical());
  }
  return CutFamily(inst.graph.node_count(), shores);
}

std::string format_witness(const DeficiencyWitness& w) {
  return "S=" + format_node_set(w.shore.canonical()) +
         " total=" + std::to_string(w.total_edges) +
         " unsafe=" + std::to_string(w.unsafe_edges);
}

}  // namespace flexcut
