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

// Primal-dual cut covering over a violation oracle.
//
// Each iteration raises the duals of all minimal violated sets uniformly until
// some candidate edge becomes tight, adds the tight edge with the smallest id,
// and recomputes the active sets. Afterwards a reverse-delete pass drops
// edges that are not needed. Duals, slacks and ε are exact rationals.

#ifndef FLEXCUT_PRIMAL_DUAL_HPP_
#define FLEXCUT_PRIMAL_DUAL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flexcut/cut_family.hpp"
#include "flexcut/graph.hpp"
#include "flexcut/rational.hpp"

namespace flexcut {

// Source of h and of the minimal violated sets for a partial solution F.
// A set is violated when h(S) = 1 and no edge of F crosses it.
class ViolationOracle {
 public:
  virtual ~ViolationOracle() = default;

  virtual int node_count() const = 0;
  virtual bool h(const NodeSet& s) const = 0;
  // Inclusion-minimal violated sets (either orientation), in shore_order.
  virtual std::vector<NodeSet> minimal_violated(const EdgeSet& f) const = 0;
  // The explicit family behind the oracle, when there is one.
  virtual const CutFamily* family() const { return nullptr; }
};

// Oracle over an explicit CutFamily. Crossing sets are precomputed per
// member, so each query is a linear sweep.
class FamilyOracle : public ViolationOracle {
 public:
  FamilyOracle(const LabeledMultigraph& g, CutFamily fam);

  int node_count() const override { return fam_.node_count(); }
  bool h(const NodeSet& s) const override { return fam_.h(s); }
  std::vector<NodeSet> minimal_violated(const EdgeSet& f) const override;
  const CutFamily* family() const override { return &fam_; }

 private:
  CutFamily fam_;
  std::vector<NodeSet> oriented_;  // shore_order
  std::vector<EdgeSet> crossing_;  // δ(oriented_[i])
};

struct Iteration {
  std::vector<NodeSet> active;
  Rational epsilon;
  int tight_edge = -1;
};

// Raised duals y_S (keyed by oriented set) and edge slacks.
class DualState {
 public:
  explicit DualState(const LabeledMultigraph& g);

  void raise(const NodeSet& s, const Rational& amount);
  const Rational& y(const NodeSet& s) const;
  // Raised sets in first-raise order.
  const std::vector<std::pair<NodeSet, Rational>>& raised() const { return raised_; }
  Rational sum() const;

  const Rational& slack(int edge) const { return slack_[edge]; }
  void charge(int edge, const Rational& amount) { slack_[edge] -= amount; }

 private:
  std::vector<std::pair<NodeSet, Rational>> raised_;
  std::unordered_map<NodeSet, std::size_t> index_;
  std::vector<Rational> slack_;
  Rational zero_ = 0;
};

struct PrimalDualTrace {
  EdgeSet candidates;
  std::vector<Iteration> iterations;
  std::vector<int> added;    // in addition order
  std::vector<int> deleted;  // in reverse-delete scan order
  EdgeSet final_edges;
};

struct PrimalDualResult {
  EdgeSet edges;
  PrimalDualTrace trace;
  DualState duals;
};

// Covers every h-positive set using edges from `candidates`. Throws
// InfeasibleError naming a set that no candidate can cover.
PrimalDualResult run_primal_dual(const LabeledMultigraph& g, const ViolationOracle& oracle,
                                 const EdgeSet& candidates);
PrimalDualResult run_primal_dual(const LabeledMultigraph& g, const ViolationOracle& oracle);

// Scans `added` backwards and drops each edge whose removal keeps every
// h-positive set covered. Returns the kept edges; `deleted` receives the
// dropped ones in scan order.
EdgeSet reverse_delete(const std::vector<int>& added, const ViolationOracle& oracle,
                       std::vector<int>* deleted = nullptr);

// Set S with h(S) = 1, violated at the start of `iteration`, and
// δ(S) ∩ F' = {edge}. Exhaustive over the oracle's explicit family; returns
// nullopt when no such set exists or the oracle has no explicit family.
std::optional<NodeSet> find_witness(const LabeledMultigraph& g, int edge, std::size_t iteration,
                                    const PrimalDualTrace& trace, const ViolationOracle& oracle);

enum class FamilyClass {
  kUncrossable,         // factor 2
  kWeaklyUncrossableP1  // factor 16
};

inline int certificate_factor(FamilyClass cls) {
  return cls == FamilyClass::kUncrossable ? 2 : 16;
}

struct CertificateReport {
  int beta = 2;
  Rational cost;      // c(F')
  Rational dual_sum;  // Σ y_S
  bool dual_feasible = true;
  bool nonnegative_duals = true;
  bool complementary_slackness = true;  // every edge of F' tight
  bool cost_identity = true;            // c(F') = Σ y_S |δ_F'(S)|
  bool per_iteration_bound = true;      // Σ_C |δ_F'(C)| <= β |𝒞|
  bool total_bound = true;              // c(F') <= β Σ h(S) y_S
  bool active_disjoint = true;
  bool output_feasible = true;
  bool witnesses_checked = false;
  bool witnesses_ok = true;
  std::size_t witness_queries = 0;
  // max over iterations of Σ_C |δ_F'(C)| / |𝒞|
  Rational max_iteration_ratio;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct CertificateOptions {
  bool check_witnesses = false;
};

CertificateReport verify_certificates(const LabeledMultigraph& g, const ViolationOracle& oracle,
                                      const PrimalDualResult& run, FamilyClass cls,
                                      const CertificateOptions& opts = {});

// Throws CertificateError listing every failure.
void enforce(const CertificateReport& report);

}  // namespace flexcut

#endif  // FLEXCUT_PRIMAL_DUAL_HPP_
