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

#include "flexcut/generator.hpp"

#include <random>
#include <vector>

#include "flexcut/errors.hpp"

namespace flexcut {
namespace {

// std::uniform_*_distribution output differs between standard libraries, so
// sampling is done by hand on top of the engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, bound), rejection on the top partial block.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return x % bound;
  }
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool chance(double prob) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < prob;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

FgcInstance generate_random_instance(std::uint64_t seed, const GeneratorParams& params) {
  const int n = params.n;
  if (n < 2 || n > kMaxNodes) throw ContractError("generator needs 2 <= n <= 256");
  if (params.m < n - 1 || params.m > kMaxEdges) {
    throw ContractError("generator needs n-1 <= m <= 256");
  }
  if (params.p < 1 || params.q < 0 || params.cost_lo < 0 || params.cost_hi < params.cost_lo) {
    throw ContractError("generator parameters out of range");
  }
  Sampler rng(seed);
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    std::vector<std::pair<int, int>> ends;
    for (int i = 1; i < n; ++i) ends.emplace_back(order[rng.below(i)], order[i]);
    while (static_cast<int>(ends.size()) < params.m) {
      const int u = static_cast<int>(rng.below(n));
      const int v = static_cast<int>(rng.below(n - 1));
      ends.emplace_back(u, v >= u ? v + 1 : v);
    }
    std::vector<LabeledMultigraph::EdgeSpec> edges;
    for (auto [u, v] : ends) {
      const int cost = rng.between(params.cost_lo, params.cost_hi);
      const Safety safety = rng.chance(params.safe_prob) ? Safety::kSafe : Safety::kUnsafe;
      edges.push_back({std::min(u, v), std::max(u, v), Rational(cost), safety});
    }
    FgcInstance inst{LabeledMultigraph(n, std::move(edges)), params.p, params.q};
    if (is_feasible(inst, inst.graph.all_edges()).feasible) return inst;
  }
  throw BudgetError("no (p,q)-feasible instance after " + std::to_string(params.max_retries) +
                    " attempts");
}

}  // namespace flexcut
