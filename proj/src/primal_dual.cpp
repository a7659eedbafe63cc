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

#include "flexcut/primal_dual.hpp"

#include <algorithm>
#include <sstream>

#include "flexcut/errors.hpp"
#include "flexcut/family.hpp"

namespace flexcut {

FamilyOracle::FamilyOracle(const LabeledMultigraph& g, CutFamily fam)
    : fam_(std::move(fam)), oriented_(fam_.oriented_members()) {
  if (fam_.node_count() != g.node_count()) {
    throw ContractError("family and graph disagree on the node count");
  }
  crossing_.reserve(oriented_.size());
  for (const auto& s : oriented_) crossing_.push_back(boundary(g, s));
}

std::vector<NodeSet> FamilyOracle::minimal_violated(const EdgeSet& f) const {
  std::vector<NodeSet> minimal;
  for (std::size_t i = 0; i < oriented_.size(); ++i) {
    if (crossing_[i].intersects(f)) continue;
    const NodeSet& s = oriented_[i];
    const bool contains_smaller = std::any_of(
        minimal.begin(), minimal.end(),
        [&s](const NodeSet& m) { return m.is_subset_of(s) && !(m == s); });
    if (!contains_smaller) minimal.push_back(s);
  }
  return minimal;
}

DualState::DualState(const LabeledMultigraph& g) {
  slack_.reserve(g.edge_count());
  for (const auto& e : g.edges()) slack_.push_back(e.cost);
}

void DualState::raise(const NodeSet& s, const Rational& amount) {
  auto [it, inserted] = index_.try_emplace(s, raised_.size());
  if (inserted) raised_.emplace_back(s, Rational(0));
  raised_[it->second].second += amount;
}

const Rational& DualState::y(const NodeSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? zero_ : raised_[it->second].second;
}

Rational DualState::sum() const {
  Rational total = 0;
  for (const auto& [s, y] : raised_) total += y;
  return total;
}

namespace {

int crossing_count(const Edge& e, const std::vector<NodeSet>& sets) {
  int count = 0;
  for (const auto& s : sets) count += s.test(e.u) != s.test(e.v) ? 1 : 0;
  return count;
}

bool covers_everything(const ViolationOracle& oracle, const EdgeSet& f) {
  return oracle.minimal_violated(f).empty();
}

}  // namespace

EdgeSet reverse_delete(const std::vector<int>& added, const ViolationOracle& oracle,
                       std::vector<int>* deleted) {
  EdgeSet kept;
  for (int e : added) kept.set(e);
  for (auto it = added.rbegin(); it != added.rend(); ++it) {
    EdgeSet without = kept;
    without.reset(*it);
    if (covers_everything(oracle, without)) {
      kept = without;
      if (deleted != nullptr) deleted->push_back(*it);
    }
  }
  return kept;
}

PrimalDualResult run_primal_dual(const LabeledMultigraph& g, const ViolationOracle& oracle) {
  return run_primal_dual(g, oracle, g.all_edges());
}

PrimalDualResult run_primal_dual(const LabeledMultigraph& g, const ViolationOracle& oracle,
                                 const EdgeSet& candidates) {
  if (oracle.node_count() != g.node_count()) {
    throw ContractError("oracle and graph disagree on the node count");
  }
  if (auto left = oracle.minimal_violated(candidates); !left.empty()) {
    throw InfeasibleError("no candidate edge covers the set " + format_node_set(left.front()));
  }

  PrimalDualResult run{EdgeSet{}, PrimalDualTrace{}, DualState(g)};
  run.trace.candidates = candidates;
  EdgeSet chosen;
  std::vector<int> counts(g.edge_count());

  while (true) {
    auto active = oracle.minimal_violated(chosen);
    if (active.empty()) break;

    std::optional<Rational> eps;
    int tight = -1;
    for (int id : (candidates - chosen).members()) {
      counts[id] = crossing_count(g.edge(id), active);
      if (counts[id] == 0) continue;
      Rational ratio = run.duals.slack(id) / counts[id];
      // Strictly smaller only: ties keep the smallest edge id.
      if (!eps || ratio < *eps) {
        eps = std::move(ratio);
        tight = id;
      }
    }
    if (!eps) {
      // Unreachable after the coverage check above, kept as a hard stop.
      throw InfeasibleError("active set " + format_node_set(active.front()) +
                            " has no candidate edge");
    }

    for (const auto& s : active) run.duals.raise(s, *eps);
    for (int id : (candidates - chosen).members()) {
      if (counts[id] > 0) run.duals.charge(id, *eps * counts[id]);
      counts[id] = 0;
    }
    chosen.set(tight);
    run.trace.added.push_back(tight);
    run.trace.iterations.push_back(Iteration{std::move(active), *eps, tight});
  }

  run.edges = reverse_delete(run.trace.added, oracle, &run.trace.deleted);
  run.trace.final_edges = run.edges;
  return run;
}

std::optional<NodeSet> find_witness(const LabeledMultigraph& g, int edge, std::size_t iteration,
                                    const PrimalDualTrace& trace,
                                    const ViolationOracle& oracle) {
  const CutFamily* fam = oracle.family();
  if (fam == nullptr || iteration >= trace.iterations.size()) return std::nullopt;
  EdgeSet before;
  for (std::size_t t = 0; t < iteration; ++t) before.set(trace.added[t]);
  EdgeSet only;
  only.set(edge);
  for (const auto& s : fam->oriented_members()) {
    const EdgeSet cut = boundary(g, s);
    if (cut.intersects(before)) continue;
    if ((cut & trace.final_edges) == only) return s;
  }
  return std::nullopt;
}

CertificateReport verify_certificates(const LabeledMultigraph& g, const ViolationOracle& oracle,
                                      const PrimalDualResult& run, FamilyClass cls,
                                      const CertificateOptions& opts) {
  CertificateReport r;
  r.beta = certificate_factor(cls);
  const EdgeSet& final_edges = run.edges;
  const auto& raised = run.duals.raised();
  r.cost = g.cost_of(final_edges);
  r.dual_sum = run.duals.sum();
  auto fail = [&r](bool& flag, const std::string& msg) {
    flag = false;
    r.failures.push_back(msg);
  };

  // Recompute loads from scratch rather than trusting the running slacks.
  std::vector<Rational> load(g.edge_count(), Rational(0));
  for (const auto& [s, y] : raised) {
    if (y < 0) fail(r.nonnegative_duals, "negative dual on " + format_node_set(s));
    if (!oracle.h(s)) fail(r.total_bound, "dual raised on h(S)=0 set " + format_node_set(s));
    for (int id : boundary(g, s).members()) load[id] += y;
  }
  for (int id : run.trace.candidates.members()) {
    if (load[id] > g.edge(id).cost) {
      fail(r.dual_feasible, "edge " + std::to_string(id) + " overloaded: " +
                                format_fraction(load[id]) + " > " +
                                format_fraction(g.edge(id).cost));
    }
    if (load[id] + run.duals.slack(id) != g.edge(id).cost) {
      fail(r.dual_feasible, "slack bookkeeping drifted on edge " + std::to_string(id));
    }
  }
  for (int id : final_edges.members()) {
    if (load[id] != g.edge(id).cost) {
      fail(r.complementary_slackness, "output edge " + std::to_string(id) + " is not tight");
    }
  }

  Rational weighted = 0;
  for (const auto& [s, y] : raised) weighted += y * (boundary(g, s) & final_edges).count();
  if (weighted != r.cost) {
    fail(r.cost_identity, "c(F') = " + format_fraction(r.cost) +
                              " but sum y_S |delta_F'(S)| = " + format_fraction(weighted));
  }

  r.max_iteration_ratio = 0;
  for (std::size_t t = 0; t < run.trace.iterations.size(); ++t) {
    const auto& active = run.trace.iterations[t].active;
    int degree = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      degree += (boundary(g, active[i]) & final_edges).count();
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        if (active[i].intersects(active[j])) {
          fail(r.active_disjoint, "iteration " + std::to_string(t) + ": active sets " +
                                      format_node_set(active[i]) + " and " +
                                      format_node_set(active[j]) + " overlap");
        }
      }
    }
    const Rational ratio = Rational(degree) / static_cast<unsigned long>(active.size());
    if (ratio > r.max_iteration_ratio) r.max_iteration_ratio = ratio;
    if (degree > r.beta * static_cast<int>(active.size())) {
      fail(r.per_iteration_bound, "iteration " + std::to_string(t) + ": degree " +
                                      std::to_string(degree) + " exceeds " +
                                      std::to_string(r.beta) + " * " +
                                      std::to_string(active.size()));
    }
  }
  if (r.cost > r.beta * r.dual_sum) {
    fail(r.total_bound, "c(F') = " + format_fraction(r.cost) + " exceeds " +
                            std::to_string(r.beta) + " * " + format_fraction(r.dual_sum));
  }
  if (auto left = oracle.minimal_violated(final_edges); !left.empty()) {
    fail(r.output_feasible, "output leaves " + format_node_set(left.front()) + " violated");
  }

  if (opts.check_witnesses && oracle.family() != nullptr) {
    r.witnesses_checked = true;
    for (std::size_t t = 0; t < run.trace.iterations.size(); ++t) {
      EdgeSet touched;
      for (const auto& c : run.trace.iterations[t].active) touched |= boundary(g, c);
      for (int e : (touched & final_edges).members()) {
        ++r.witness_queries;
        if (!find_witness(g, e, t, run.trace, oracle)) {
          fail(r.witnesses_ok, "no witness for edge " + std::to_string(e) + " at iteration " +
                                   std::to_string(t));
        }
      }
    }
  }
  return r;
}

void enforce(const CertificateReport& report) {
  if (report.ok()) return;
  std::ostringstream os;
  os << "certificate check failed (beta=" << report.beta << "):";
  for (const auto& f : report.failures) os << "\n  " << f;
  throw CertificateError(os.str());
}

}  // namespace flexcut
