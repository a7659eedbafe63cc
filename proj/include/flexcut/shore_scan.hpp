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

// Exhaustive scans over all canonical shores of a small graph.
//
// A canonical shore is encoded as a 64-bit mask over nodes 1..n-1 (node 0 is
// never in it), so the scan space is [1, 2^(n-1)). Every kernel exists in a
// serial reference form and an OpenMP form; both return identical results,
// ordered by mask.

#ifndef FLEXCUT_SHORE_SCAN_HPP_
#define FLEXCUT_SHORE_SCAN_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "flexcut/bits.hpp"
#include "flexcut/graph.hpp"

namespace flexcut {

enum class ExecutionMode { kSerial, kParallel };

struct CutStats {
  std::uint64_t mask = 0;  // bit i set <=> node i in the shore
  int total = 0;
  int unsafe = 0;

  int safe() const { return total - unsafe; }
  NodeSet shore() const { return NodeSet::from_word(mask); }
};

// Edge endpoints restricted to an edge subset, packed for the scan loop.
class ShoreScanner {
 public:
  // Throws BudgetError if n > max_nodes (hard cap 40).
  ShoreScanner(const LabeledMultigraph& g, const EdgeSet& f, int max_nodes);

  int node_count() const { return n_; }
  std::uint64_t shore_count() const { return (std::uint64_t{1} << (n_ - 1)) - 1; }

  CutStats stats(std::uint64_t mask) const {
    CutStats s{mask, 0, 0};
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (((mask >> u_[i]) ^ (mask >> v_[i])) & 1U) {
        ++s.total;
        s.unsafe += unsafe_[i];
      }
    }
    return s;
  }

  // Shore with index k (0-based) in scan order.
  static std::uint64_t mask_at(std::uint64_t k) { return (k + 1) << 1; }

  // All shores whose stats satisfy pred, ordered by mask.
  template <typename Pred>
  std::vector<CutStats> collect(Pred pred, ExecutionMode mode) const;

  // The smallest-mask shore satisfying pred.
  template <typename Pred>
  std::optional<CutStats> first(Pred pred, ExecutionMode mode) const;

  // min over shores of |δ(S) ∩ F|.
  int min_total(ExecutionMode mode) const;

 private:
  int n_;
  std::vector<std::uint8_t> u_;
  std::vector<std::uint8_t> v_;
  std::vector<std::uint8_t> unsafe_;
};

template <typename Pred>
std::vector<CutStats> ShoreScanner::collect(Pred pred, ExecutionMode mode) const {
  const auto count = static_cast<std::int64_t>(shore_count());
  std::vector<CutStats> out;
  if (mode == ExecutionMode::kSerial) {
    for (std::int64_t k = 0; k < count; ++k) {
      CutStats s = stats(mask_at(static_cast<std::uint64_t>(k)));
      if (pred(s)) out.push_back(s);
    }
    return out;
  }
#pragma omp parallel
  {
    std::vector<CutStats> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 0; k < count; ++k) {
      CutStats s = stats(mask_at(static_cast<std::uint64_t>(k)));
      if (pred(s)) local.push_back(s);
    }
#pragma omp critical(flexcut_collect_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(),
            [](const CutStats& a, const CutStats& b) { return a.mask < b.mask; });
  return out;
}

template <typename Pred>
std::optional<CutStats> ShoreScanner::first(Pred pred, ExecutionMode mode) const {
  const auto count = static_cast<std::int64_t>(shore_count());
  if (mode == ExecutionMode::kSerial) {
    for (std::int64_t k = 0; k < count; ++k) {
      CutStats s = stats(mask_at(static_cast<std::uint64_t>(k)));
      if (pred(s)) return s;
    }
    return std::nullopt;
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t k = 0; k < count; ++k) {
    if (k < best && pred(stats(mask_at(static_cast<std::uint64_t>(k))))) best = k;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return stats(mask_at(static_cast<std::uint64_t>(best)));
}

}  // namespace flexcut

#endif  // FLEXCUT_SHORE_SCAN_HPP_
