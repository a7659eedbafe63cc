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

#ifndef FLEXCUT_TESTS_FIXTURES_HPP_
#define FLEXCUT_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flexcut/fgc.hpp"
#include "flexcut/generator.hpp"

namespace fixtures {

using namespace flexcut;

#ifndef FLEXCUT_TEST_DATA
#define FLEXCUT_TEST_DATA "tests/data"
#endif

inline std::string data_path(const std::string& name) {
  return std::string(FLEXCUT_TEST_DATA) + "/" + name;
}

// Ring v1-v2-v3-v4-v1 (nodes 0..3) with doubled edges, exactly 4-edge-connected.
inline FgcInstance ring4(int p = 3, int q = 2) {
  const Rational one(1);
  return FgcInstance{LabeledMultigraph(4, {{0, 1, one, Safety::kSafe},
                                           {0, 1, one, Safety::kUnsafe},
                                           {1, 2, one, Safety::kSafe},
                                           {1, 2, one, Safety::kSafe},
                                           {2, 3, one, Safety::kSafe},
                                           {2, 3, one, Safety::kUnsafe},
                                           {0, 3, one, Safety::kUnsafe},
                                           {0, 3, one, Safety::kUnsafe}}),
                     p, q};
}

inline NodeSet nodes(std::initializer_list<int> ids) { return NodeSet(ids); }

// Arbitrary multigraph, not necessarily connected or feasible.
inline LabeledMultigraph random_graph(std::uint64_t seed, int n, int m, double safe_prob,
                                      int cost_hi = 1) {
  std::mt19937_64 rng(seed);
  std::vector<LabeledMultigraph::EdgeSpec> edges;
  for (int i = 0; i < m; ++i) {
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    const int cost = 1 + static_cast<int>(rng() % cost_hi);
    const bool safe = static_cast<double>(rng() % 1000) < safe_prob * 1000;
    edges.push_back({u, v, Rational(cost), safe ? Safety::kSafe : Safety::kUnsafe});
  }
  return LabeledMultigraph(n, std::move(edges));
}

inline EdgeSet random_subset(std::mt19937_64& rng, const EdgeSet& pool, int percent = 50) {
  EdgeSet out;
  for (int e : pool.members()) {
    if (static_cast<int>(rng() % 100) < percent) out.set(e);
  }
  return out;
}

// Feasible for (p,q) with the given generator shape.
inline FgcInstance instance(std::uint64_t seed, int n, int m, int p, int q = 2,
                            double safe_prob = 0.4, int cost_hi = 1) {
  GeneratorParams params;
  params.n = n;
  params.m = m;
  params.p = p;
  params.q = q;
  params.safe_prob = safe_prob;
  params.cost_lo = 1;
  params.cost_hi = cost_hi;
  return generate_random_instance(seed, params);
}

}  // namespace fixtures

#endif  // FLEXCUT_TESTS_FIXTURES_HPP_
