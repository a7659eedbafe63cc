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

// Structural checks on explicit cut families.
//
// Pair checks are exhaustive over all member pairs and run either serially or
// with OpenMP. In both modes the reported counterexample is the first failing
// pair in shore_order, so results do not depend on the schedule.

#ifndef FLEXCUT_FAMILY_HPP_
#define FLEXCUT_FAMILY_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flexcut/cut_family.hpp"
#include "flexcut/fgc.hpp"
#include "flexcut/graph.hpp"
#include "flexcut/shore_scan.hpp"

namespace flexcut {

struct PairCheck {
  bool holds = true;
  // Offending (A, B) in the orientation that failed.
  std::optional<std::pair<NodeSet, NodeSet>> counterexample;
};

// h(A)=h(B)=1 implies h(A\B)=h(B\A)=1 or h(A∩B)=h(A∪B)=1.
PairCheck check_uncrossable(const CutFamily& fam,
                            ExecutionMode mode = ExecutionMode::kParallel);

// h(A)=h(B)=1 implies at least two of A∪B, A∩B, A\B, B\A are members.
PairCheck check_weakly_uncrossable(const CutFamily& fam,
                                   ExecutionMode mode = ExecutionMode::kParallel);

// The same 2-of-4 condition on a raw list of sets, before complement closure
// and with plain (orientation-sensitive) membership.
PairCheck generating_list_check(std::span<const NodeSet> shores,
                                ExecutionMode mode = ExecutionMode::kParallel);

struct ViolatedCollections {
  std::vector<NodeSet> violated;  // oriented members with δ(S) ∩ F = ∅
  std::vector<NodeSet> minimal;   // inclusion-minimal among `violated`
};

ViolatedCollections violated_collections(const CutFamily& fam, const LabeledMultigraph& g,
                                         const EdgeSet& f);

// Inclusion-minimal elements of a list of sets; output in shore_order.
std::vector<NodeSet> minimal_elements(std::vector<NodeSet> sets);

struct P1Counterexample {
  std::size_t sample = 0;  // index into the F samples
  NodeSet s1, s2, c;
  NodeSet leftover;        // S2 \ (S1 ∪ C), nonempty and not violated
};

struct P1Check {
  bool holds = true;
  std::size_t samples_checked = 0;
  std::size_t triples_checked = 0;
  std::optional<P1Counterexample> counterexample;
};

// For each F: for violated S1 ⊊ S2 and minimal violated C crossing both,
// S2 \ (S1 ∪ C) must be empty or violated.
P1Check check_property_P1(const CutFamily& fam, const LabeledMultigraph& g,
                          std::span<const EdgeSet> f_samples,
                          ExecutionMode mode = ExecutionMode::kParallel);

// The same property with "violated" read as "deficient in (V, F1 ∪ F)".
// Also reports whether that reading produced the same violated collections as
// the coverage reading used by check_property_P1.
struct JointP1Check {
  P1Check check;
  bool readings_agree = true;
};
JointP1Check check_property_P1_joint(const FgcInstance& inst, const EdgeSet& f1,
                                     const CutFamily& deficient,
                                     std::span<const EdgeSet> f_samples,
                                ExecutionMode mode = ExecutionMode::kParallel);

struct ParityReport {
  bool applicable = false;
  std::string reason;  // why not applicable
  int p = 0;
  int union_size = 0;  // |δ(A∪B)|
  int inter_size = 0;  // |δ(A∩B)|
  int a_minus_b = 0;   // |δ(A\B)|
  int b_minus_a = 0;   // |δ(B\A)|
  bool union_inter_parity = true;  // |δ(A∪B)| ≡ |δ(A∩B)|
  bool diff_parity = true;         // |δ(A\B)| ≡ |δ(B\A)|
  // p even: |δ(A∩B)| ≡ |δ(A\B)| + 1. p odd: |δ(A∩B)| ≡ |δ(A\B)|.
  bool cross_parity = true;
  // p even: one pair consists of (p+1)-cuts and the other holds a p-cut.
  // p odd: all four derived cuts are (p+1)-cuts.
  bool size_pattern = true;

  bool holds() const {
    return !applicable ||
           (union_inter_parity && diff_parity && cross_parity && size_pattern);
  }
};

// Parity consequences for two crossing deficient shores of a (p,1)-feasible
// F1. Deficiency and crossing are checked and reported; (p,1)-feasibility of
// F1 is the caller's responsibility.
ParityReport parity_check(const LabeledMultigraph& g, const EdgeSet& f1, const NodeSet& a,
                          const NodeSet& b, int p);

// Family file lines: "S={i,j,k}".
std::string format_family(const CutFamily& fam);
std::string format_pair(const std::pair<NodeSet, NodeSet>& pr);

}  // namespace flexcut

#endif  // FLEXCUT_FAMILY_HPP_
