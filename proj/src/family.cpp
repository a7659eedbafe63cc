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

#include "flexcut/family.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace flexcut {
namespace {

using Failure = std::optional<std::pair<NodeSet, NodeSet>>;

// Finds the first pair (i < j) in index order for which check(i, j) fails.
template <typename Check>
PairCheck scan_pairs(std::size_t count, Check check, ExecutionMode mode) {
  const auto n = static_cast<std::int64_t>(count);
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::int64_t best = kNone;
  if (mode == ExecutionMode::kSerial) {
    for (std::int64_t i = 0; i < n && best == kNone; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (check(i, j)) {
          best = i * n + j;
          break;
        }
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (i * n + j >= best) break;
        if (check(i, j)) {
          best = std::min(best, i * n + j);
          break;
        }
      }
    }
  }
  PairCheck out;
  if (best != kNone) {
    out.holds = false;
    out.counterexample = check(best / n, best % n);
  }
  return out;
}

// Orientations (A, B) and (A, V\B) cover all four combinations, since
// complementing both sides maps the four derived sets onto complements of
// each other.
template <typename Rule>
PairCheck check_family_pairs(const CutFamily& fam, Rule rule, ExecutionMode mode) {
  const auto shores = fam.shores();
  const NodeSet all = fam.all_nodes();
  auto check = [&](std::int64_t i, std::int64_t j) -> Failure {
    const NodeSet& a = shores[i];
    for (const NodeSet& b : {shores[j], all - shores[j]}) {
      if (!rule(a, b)) return std::make_pair(a, b);
    }
    return std::nullopt;
  };
  return scan_pairs(shores.size(), check, mode);
}

}  // namespace

PairCheck check_uncrossable(const CutFamily& fam, ExecutionMode mode) {
  auto rule = [&fam](const NodeSet& a, const NodeSet& b) {
    return (fam.h(a - b) && fam.h(b - a)) || (fam.h(a & b) && fam.h(a | b));
  };
  return check_family_pairs(fam, rule, mode);
}

PairCheck check_weakly_uncrossable(const CutFamily& fam, ExecutionMode mode) {
  auto rule = [&fam](const NodeSet& a, const NodeSet& b) {
    const int hits = int{fam.h(a | b)} + int{fam.h(a & b)} + int{fam.h(a - b)} +
                     int{fam.h(b - a)};
    return hits >= 2;
  };
  return check_family_pairs(fam, rule, mode);
}

PairCheck generating_list_check(std::span<const NodeSet> shores, ExecutionMode mode) {
  std::vector<NodeSet> items;
  std::unordered_set<NodeSet> members;
  for (const auto& s : shores) {
    if (members.insert(s).second) items.push_back(s);
  }
  auto in = [&members](const NodeSet& s) { return s.any() && members.contains(s); };
  auto check = [&](std::int64_t i, std::int64_t j) -> Failure {
    const NodeSet& a = items[i];
    const NodeSet& b = items[j];
    const int hits = int{in(a | b)} + int{in(a & b)} + int{in(a - b)} + int{in(b - a)};
    if (hits >= 2) return std::nullopt;
    return std::make_pair(a, b);
  };
  return scan_pairs(items.size(), check, mode);
}

std::vector<NodeSet> minimal_elements(std::vector<NodeSet> sets) {
  std::sort(sets.begin(), sets.end(), shore_order);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // A set is non-minimal iff it strictly contains a minimal one; those all
  // come earlier in size order.
  std::vector<NodeSet> minimal;
  for (const auto& s : sets) {
    const bool contains_smaller = std::any_of(
        minimal.begin(), minimal.end(),
        [&s](const NodeSet& m) { return m.is_subset_of(s) && !(m == s); });
    if (!contains_smaller) minimal.push_back(s);
  }
  return minimal;
}

ViolatedCollections violated_collections(const CutFamily& fam, const LabeledMultigraph& g,
                                         const EdgeSet& f) {
  ViolatedCollections out;
  const NodeSet all = fam.all_nodes();
  for (const auto& s : fam.shores()) {
    if (!boundary(g, s).intersects(f)) {
      out.violated.push_back(s);
      out.violated.push_back(all - s);
    }
  }
  std::sort(out.violated.begin(), out.violated.end(), shore_order);
  out.minimal = minimal_elements(out.violated);
  return out;
}

namespace {

// P1 on one explicit violated collection (both orientations present).
std::optional<P1Counterexample> p1_on_violated(const std::vector<NodeSet>& violated,
                                               const NodeSet& all,
                                               std::size_t& triples,
                                               ExecutionMode mode) {
  const std::unordered_set<NodeSet> is_violated(violated.begin(), violated.end());
  const auto minimal = minimal_elements(violated);
  const auto n = static_cast<std::int64_t>(violated.size());

  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::int64_t best = kNone;
  std::size_t counted = 0;

  // Linear key (c, s1, s2) so the reported triple is schedule independent.
  auto key = [n](std::size_t c, std::int64_t i, std::int64_t j) {
    return (static_cast<std::int64_t>(c) * n + i) * n + j;
  };
  auto scan_row = [&](std::int64_t i, std::int64_t& local_best, std::size_t& local_count) {
    const NodeSet& s1 = violated[i];
    for (std::size_t c = 0; c < minimal.size(); ++c) {
      const NodeSet& cset = minimal[c];
      if (!crosses(cset, s1, all)) continue;
      for (std::int64_t j = 0; j < n; ++j) {
        const NodeSet& s2 = violated[j];
        if (j == i || !s1.is_subset_of(s2) || !crosses(cset, s2, all)) continue;
        ++local_count;
        const NodeSet rest = s2 - (s1 | cset);
        if (rest.any() && !is_violated.contains(rest)) {
          local_best = std::min(local_best, key(c, i, j));
        }
      }
    }
  };

  if (mode == ExecutionMode::kSerial) {
    for (std::int64_t i = 0; i < n; ++i) scan_row(i, best, counted);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best) reduction(+ : counted)
    for (std::int64_t i = 0; i < n; ++i) scan_row(i, best, counted);
  }
  triples += counted;
  if (best == kNone) return std::nullopt;

  const std::int64_t j = best % n;
  const std::int64_t i = (best / n) % n;
  const auto c = static_cast<std::size_t>(best / n / n);
  P1Counterexample cx;
  cx.s1 = violated[i];
  cx.s2 = violated[j];
  cx.c = minimal[c];
  cx.leftover = cx.s2 - (cx.s1 | cx.c);
  return cx;
}

}  // namespace

P1Check check_property_P1(const CutFamily& fam, const LabeledMultigraph& g,
                          std::span<const EdgeSet> f_samples, ExecutionMode mode) {
  P1Check out;
  for (std::size_t k = 0; k < f_samples.size(); ++k) {
    const auto vc = violated_collections(fam, g, f_samples[k]);
    ++out.samples_checked;
    if (auto cx = p1_on_violated(vc.violated, fam.all_nodes(), out.triples_checked, mode)) {
      cx->sample = k;
      out.holds = false;
      out.counterexample = cx;
      return out;
    }
  }
  return out;
}

JointP1Check check_property_P1_joint(const FgcInstance& inst, const EdgeSet& f1,
                                     const CutFamily& deficient,
                                     std::span<const EdgeSet> f_samples,
                                     ExecutionMode mode) {
  JointP1Check out;
  const NodeSet all = inst.graph.all_nodes();
  for (std::size_t k = 0; k < f_samples.size(); ++k) {
    ScanOptions opts;
    opts.mode = mode;
    std::vector<NodeSet> violated;
    for (const auto& w : deficient_cut_details(inst, f1 | f_samples[k], opts)) {
      violated.push_back(w.shore.canonical());
      violated.push_back(w.shore.complement());
    }
    std::sort(violated.begin(), violated.end(), shore_order);
    if (violated != violated_collections(deficient, inst.graph, f_samples[k]).violated) {
      out.readings_agree = false;
    }
    ++out.check.samples_checked;
    if (auto cx = p1_on_violated(violated, all, out.check.triples_checked, mode)) {
      cx->sample = k;
      out.check.holds = false;
      out.check.counterexample = cx;
      return out;
    }
  }
  return out;
}

ParityReport parity_check(const LabeledMultigraph& g, const EdgeSet& f1, const NodeSet& a,
                          const NodeSet& b, int p) {
  ParityReport r;
  r.p = p;
  const NodeSet all = g.all_nodes();
  auto deficient = [&](const NodeSet& s) {
    const EdgeSet cut = boundary(g, s) & f1;
    return cut.count() == p + 1 && (cut & g.unsafe_edges()).count() >= 2;
  };
  if (!crosses(a, b, all)) {
    r.reason = "shores do not cross";
    return r;
  }
  if (!deficient(a) || !deficient(b)) {
    r.reason = "shores are not both deficient";
    return r;
  }
  r.applicable = true;
  r.union_size = cut_size(g, f1, a | b);
  r.inter_size = cut_size(g, f1, a & b);
  r.a_minus_b = cut_size(g, f1, a - b);
  r.b_minus_a = cut_size(g, f1, b - a);
  auto same_parity = [](int x, int y) { return (x - y) % 2 == 0; };
  r.union_inter_parity = same_parity(r.union_size, r.inter_size);
  r.diff_parity = same_parity(r.a_minus_b, r.b_minus_a);
  const int big = p + 1;
  if (p % 2 == 0) {
    r.cross_parity = !same_parity(r.inter_size, r.a_minus_b);
    const bool first_pair_big = r.union_size == big && r.inter_size == big;
    const bool second_pair_big = r.a_minus_b == big && r.b_minus_a == big;
    const bool first_has_p = r.union_size == p || r.inter_size == p;
    const bool second_has_p = r.a_minus_b == p || r.b_minus_a == p;
    r.size_pattern = (first_pair_big && second_has_p) || (second_pair_big && first_has_p);
  } else {
    r.cross_parity = same_parity(r.inter_size, r.a_minus_b);
    r.size_pattern = r.union_size == big && r.inter_size == big && r.a_minus_b == big &&
                     r.b_minus_a == big;
  }
  return r;
}

std::string format_family(const CutFamily& fam) {
  std::ostringstream os;
  for (const auto& s : fam.shores()) os << "S=" << format_node_set(s) << '\n';
  return os.str();
}

std::string format_pair(const std::pair<NodeSet, NodeSet>& pr) {
  return "(" + format_node_set(pr.first) + "," + format_node_set(pr.second) + ")";
}

}  // namespace flexcut
