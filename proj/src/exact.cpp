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

#include "flexcut/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "flexcut/errors.hpp"
#include "flexcut/io.hpp"

namespace flexcut {
namespace {

using Mask = std::uint64_t;

// Costs scaled to a common denominator.
class ScaledCosts {
 public:
  explicit ScaledCosts(const LabeledMultigraph& g) {
    mpz_class den = 1;
    for (const auto& e : g.edges()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.cost.get_den().get_mpz_t());
    }
    for (const auto& e : g.edges()) {
      mpz_class scaled = e.cost.get_num() * (den / e.cost.get_den());
      if (!scaled.fits_slong_p() || scaled > (std::numeric_limits<long>::max() >> 8)) {
        throw BudgetError("edge costs too large for the exact solver");
      }
      cost_.push_back(scaled.get_si());
    }
  }
  long operator[](int id) const { return cost_[id]; }
  long of(Mask m) const {
    long total = 0;
    while (m != 0) {
      total += cost_[std::countr_zero(m)];
      m &= m - 1;
    }
    return total;
  }

 private:
  std::vector<long> cost_;
};

// (cost, size, sorted ids); masks compare by lowest differing bit.
bool ranks_before(long ca, Mask a, long cb, Mask b) {
  if (ca != cb) return ca < cb;
  const int sa = std::popcount(a);
  const int sb = std::popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  // Equal sizes: the set holding the lowest differing id comes first.
  const Mask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

Mask to_mask(const EdgeSet& s) { return s.word(0); }

EdgeSet from_mask(Mask m) { return EdgeSet::from_word(m); }

// Branch-and-bound over "requirement rows". Row::satisfied(X) decides a row
// and Row::open() lists the edges that can still help it.
template <typename Rows>
class BranchAndBound {
 public:
  BranchAndBound(const Rows& rows, const ScaledCosts& cost, Mask universe, std::uint64_t budget)
      : rows_(rows), cost_(cost), universe_(universe), budget_(budget) {}

  bool solve() {
    if (!rows_.all_satisfied(universe_)) return false;
    recurse(0, 0, 0);
    return found_;
  }
  Mask best() const { return best_; }
  long best_cost() const { return best_cost_; }
  std::uint64_t explored() const { return explored_; }

 private:
  void recurse(Mask chosen, Mask banned, long cost) {
    if (++explored_ > budget_) {
      throw BudgetError("exact search exceeded " + std::to_string(budget_) + " nodes");
    }
    // Row with the fewest open edges among the unsatisfied ones.
    Mask open = 0;
    int open_count = std::numeric_limits<int>::max();
    bool any = false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_.satisfied(r, chosen)) continue;
      any = true;
      const Mask here = rows_.helpful(r) & ~chosen & ~banned;
      const int c = std::popcount(here);
      if (c < open_count) {
        open_count = c;
        open = here;
        if (c == 0) return;
      }
    }
    if (!any) {
      if (!found_ || ranks_before(cost, chosen, best_cost_, best_)) {
        found_ = true;
        best_ = chosen;
        best_cost_ = cost;
      }
      return;
    }
    if (!rows_.all_satisfied(universe_ & ~banned)) return;

    std::vector<int> order;
    for (Mask m = open; m != 0; m &= m - 1) order.push_back(std::countr_zero(m));
    std::sort(order.begin(), order.end(), [this](int a, int b) {
      return cost_[a] != cost_[b] ? cost_[a] < cost_[b] : a < b;
    });

    const int size = std::popcount(chosen) + 1;
    Mask tried = 0;
    for (int e : order) {
      const long next = cost + cost_[e];
      if (found_ && (next > best_cost_ ||
                     (next == best_cost_ && size > std::popcount(best_)))) {
        // Later edges cost at least as much.
        break;
      }
      recurse(chosen | (Mask{1} << e), banned | tried, next);
      tried |= Mask{1} << e;
    }
  }

  const Rows& rows_;
  const ScaledCosts& cost_;
  Mask universe_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  bool found_ = false;
  Mask best_ = 0;
  long best_cost_ = 0;
};

struct FgcRows {
  std::vector<Mask> safe;
  std::vector<Mask> unsafe;
  int p = 1;
  int q = 0;

  std::size_t size() const { return safe.size(); }
  bool satisfied(std::size_t r, Mask x) const {
    const int s = std::popcount(safe[r] & x);
    const int u = std::popcount(unsafe[r] & x);
    return cut_survives(s, u, p, q);
  }
  Mask helpful(std::size_t r) const { return safe[r] | unsafe[r]; }
  bool all_satisfied(Mask x) const {
    for (std::size_t r = 0; r < size(); ++r) {
      if (!satisfied(r, x)) return false;
    }
    return true;
  }
};

struct CoverRows {
  std::vector<Mask> cross;

  std::size_t size() const { return cross.size(); }
  bool satisfied(std::size_t r, Mask x) const { return (cross[r] & x) != 0; }
  Mask helpful(std::size_t r) const { return cross[r]; }
  bool all_satisfied(Mask x) const {
    for (Mask c : cross) {
      if ((c & x) == 0) return false;
    }
    return true;
  }
};

FgcRows build_fgc_rows(const FgcInstance& inst) {
  const auto& g = inst.graph;
  FgcRows rows;
  rows.p = inst.p;
  rows.q = inst.q;
  const Mask unsafe = to_mask(g.unsafe_edges());
  std::unordered_set<Mask> seen;
  const Mask limit = Mask{1} << (g.node_count() - 1);
  for (Mask m = 1; m < limit; ++m) {
    const Mask cross = to_mask(boundary(g, NodeSet::from_word(m << 1)));
    if (!seen.insert(cross).second) continue;
    rows.safe.push_back(cross & ~unsafe);
    rows.unsafe.push_back(cross & unsafe);
  }
  return rows;
}

// Crossing patterns restricted to candidates, deduplicated, keeping only the
// inclusion-minimal ones (a cover of those covers the rest).
CoverRows build_cover_rows(const CutFamily& fam, const LabeledMultigraph& g, Mask candidates) {
  std::vector<Mask> patterns;
  std::unordered_set<Mask> seen;
  for (const auto& s : fam.shores()) {
    const Mask cross = to_mask(boundary(g, s)) & candidates;
    if (cross == 0) {
      throw InfeasibleError("no candidate edge crosses shore " + format_node_set(s));
    }
    if (seen.insert(cross).second) patterns.push_back(cross);
  }
  std::sort(patterns.begin(), patterns.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  CoverRows rows;
  for (Mask m : patterns) {
    const bool implied = std::any_of(rows.cross.begin(), rows.cross.end(),
                                     [m](Mask k) { return (k & ~m) == 0; });
    if (!implied) rows.cross.push_back(m);
  }
  if (rows.cross.size() > 10'000) {
    throw BudgetError("cover family has " + std::to_string(rows.cross.size()) +
                      " distinct minimal crossing patterns, limit is 10000");
  }
  return rows;
}

ExactSolution finish(const LabeledMultigraph& g, Mask best, std::uint64_t explored) {
  ExactSolution sol;
  sol.edges = from_mask(best);
  sol.cost = g.cost_of(sol.edges);
  sol.explored = explored;
  return sol;
}

}  // namespace

bool solution_less(const LabeledMultigraph& g, const EdgeSet& a, const EdgeSet& b) {
  const Rational ca = g.cost_of(a);
  const Rational cb = g.cost_of(b);
  if (ca != cb) return ca < cb;
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

ExactSolution exact_min_cost_feasible(const FgcInstance& inst, const SolveBudget& budget) {
  const auto& g = inst.graph;
  if (g.node_count() > budget.max_nodes || g.edge_count() > budget.max_edges ||
      g.edge_count() > 64) {
    throw BudgetError("exact FGC solver budget is n <= " + std::to_string(budget.max_nodes) +
                      ", m <= " + std::to_string(std::min(budget.max_edges, 64)));
  }
  const ScaledCosts cost(g);
  const FgcRows rows = build_fgc_rows(inst);
  BranchAndBound<FgcRows> bb(rows, cost, to_mask(g.all_edges()), budget.max_subsets_explored);
  if (!bb.solve()) {
    throw InfeasibleError("instance is not (" + std::to_string(inst.p) + "," +
                          std::to_string(inst.q) + ")-feasible");
  }
  return finish(g, bb.best(), bb.explored());
}

ExactSolution exact_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                   const SolveBudget& budget) {
  return exact_min_cost_cover(fam, g, g.all_edges(), budget);
}

ExactSolution exact_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                   const EdgeSet& candidates, const SolveBudget& budget) {
  if (g.edge_count() > std::min(budget.max_edges, 64) || g.node_count() > budget.max_nodes) {
    throw BudgetError("exact cover solver budget is m <= " +
                      std::to_string(std::min(budget.max_edges, 64)));
  }
  const ScaledCosts cost(g);
  const CoverRows rows = build_cover_rows(fam, g, to_mask(candidates));
  BranchAndBound<CoverRows> bb(rows, cost, to_mask(candidates), budget.max_subsets_explored);
  if (!bb.solve()) throw InfeasibleError("family cannot be covered");
  return finish(g, bb.best(), bb.explored());
}

namespace {

template <typename Rows>
ExactSolution exhaustive(const LabeledMultigraph& g, const Rows& rows, Mask universe) {
  if (std::popcount(universe) > 22) throw BudgetError("exhaustive search limited to 22 edges");
  const ScaledCosts cost(g);
  std::vector<int> ids;
  for (Mask m = universe; m != 0; m &= m - 1) ids.push_back(std::countr_zero(m));
  bool found = false;
  Mask best = 0;
  long best_cost = 0;
  const std::uint64_t total = std::uint64_t{1} << ids.size();
  for (std::uint64_t k = 0; k < total; ++k) {
    Mask x = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if ((k >> i) & 1U) x |= Mask{1} << ids[i];
    }
    if (!rows.all_satisfied(x)) continue;
    const long c = cost.of(x);
    if (!found || ranks_before(c, x, best_cost, best)) {
      found = true;
      best = x;
      best_cost = c;
    }
  }
  if (!found) throw InfeasibleError("no feasible subset");
  return finish(g, best, total);
}

}  // namespace

ExactSolution exhaustive_min_cost_feasible(const FgcInstance& inst) {
  return exhaustive(inst.graph, build_fgc_rows(inst), to_mask(inst.graph.all_edges()));
}

ExactSolution exhaustive_min_cost_cover(const CutFamily& fam, const LabeledMultigraph& g,
                                        const EdgeSet& candidates) {
  CoverRows rows;
  for (const auto& s : fam.shores()) rows.cross.push_back(to_mask(boundary(g, s) & candidates));
  return exhaustive(g, rows, to_mask(candidates));
}

std::uint64_t instance_hash(const FgcInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string golden_line(const FgcInstance& inst, const ExactSolution& sol) {
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(instance_hash(inst)));
  std::ostringstream os;
  os << hash << ' ' << format_cost(sol.cost) << ' ';
  const auto ids = sol.edges.members();
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

}  // namespace flexcut
