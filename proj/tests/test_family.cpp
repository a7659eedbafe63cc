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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "flexcut/counterexample.hpp"
#include "flexcut/errors.hpp"
#include "flexcut/family.hpp"
#include "flexcut/pipeline.hpp"
#include "flexcut/primal_dual.hpp"
#include "oracles.hpp"

using namespace flexcut;
using fixtures::nodes;

namespace {

oracle::Family to_oracle(const CutFamily& fam) {
  std::vector<oracle::Mask> shores;
  for (const auto& s : fam.shores()) shores.push_back(oracle::to_mask(s));
  return oracle::make_family(fam.node_count(), shores);
}

std::vector<NodeSet> to_sets(const std::vector<oracle::Mask>& masks) {
  std::vector<NodeSet> out;
  for (auto m : masks) out.push_back(oracle::to_set(m));
  std::sort(out.begin(), out.end(), shore_order);
  return out;
}

CutFamily random_family(std::mt19937_64& rng, int n, int percent) {
  std::vector<NodeSet> shores;
  for (oracle::Mask s = 2; s < oracle::full(n); s += 2) {
    if (static_cast<int>(rng() % 100) < percent) shores.push_back(oracle::to_set(s));
  }
  return CutFamily(n, shores);
}

// The same unordered pair of cuts.
bool same_cuts(const std::pair<NodeSet, NodeSet>& got, NodeSet a, NodeSet b, int n) {
  const NodeSet ga = canonical_side(got.first, n);
  const NodeSet gb = canonical_side(got.second, n);
  a = canonical_side(a, n);
  b = canonical_side(b, n);
  return (ga == a && gb == b) || (ga == b && gb == a);
}

}  // namespace

TEST_CASE("cut family canonicalizes and deduplicates") {
  const CutFamily fam(4, std::vector<NodeSet>{nodes({0, 1}), nodes({2, 3}), nodes({3})});
  CHECK(fam.size() == 2);
  CHECK(fam.shores()[0] == nodes({3}));
  CHECK(fam.h(nodes({0, 1})));
  CHECK(fam.h(nodes({0, 1, 2})));
  CHECK_FALSE(fam.h(nodes({1})));
  CHECK_FALSE(fam.h(NodeSet{}));
  CHECK_FALSE(fam.h(NodeSet::prefix(4)));
  CHECK(fam.oriented_members().size() == 4);
  CHECK_THROWS_AS(CutFamily(4, std::vector<NodeSet>{NodeSet::prefix(4)}), ContractError);
  const CutFamily closed = close_complements(std::vector<NodeSet>{nodes({1})}, 3);
  CHECK(closed.size() == 1);
  CHECK(closed.h(nodes({0, 2})));
}

TEST_CASE("ring deficient family is weakly uncrossable but not uncrossable") {
  const auto inst = fixtures::ring4(3, 2);
  const CutFamily fam = deficient_cuts(inst, inst.graph.all_edges());
  for (auto mode : {ExecutionMode::kSerial, ExecutionMode::kParallel}) {
    const PairCheck unc = check_uncrossable(fam, mode);
    CHECK_FALSE(unc.holds);
    REQUIRE(unc.counterexample);
    CHECK(same_cuts(*unc.counterexample, nodes({0, 1}), nodes({1, 2}), 4));
    CHECK(check_weakly_uncrossable(fam, mode).holds);
  }
  CHECK(format_family(fam) == "S={3}\nS={1,2}\nS={2,3}\nS={1,2,3}\n");
}

TEST_CASE("ring minimal violated sets with nothing chosen") {
  const auto inst = fixtures::ring4(3, 2);
  const CutFamily fam = deficient_cuts(inst, inst.graph.all_edges());
  const auto vc = violated_collections(fam, inst.graph, EdgeSet{});
  CHECK(vc.minimal == std::vector<NodeSet>{nodes({0}), nodes({3}), nodes({1, 2})});
  CHECK(FamilyOracle(inst.graph, fam).minimal_violated(EdgeSet{}) == vc.minimal);
}

TEST_CASE("pair checkers agree with the brute-force oracle") {
  std::mt19937_64 rng(17);
  int unc = 0, weak = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const CutFamily fam = random_family(rng, n, 10 + static_cast<int>(rng() % 60));
    const auto ref = to_oracle(fam);
    const PairCheck us = check_uncrossable(fam, ExecutionMode::kSerial);
    const PairCheck up = check_uncrossable(fam, ExecutionMode::kParallel);
    const PairCheck ws = check_weakly_uncrossable(fam, ExecutionMode::kSerial);
    const PairCheck wp = check_weakly_uncrossable(fam, ExecutionMode::kParallel);
    CAPTURE(trial);
    CHECK(us.holds == oracle::uncrossable(ref));
    CHECK(ws.holds == oracle::weakly_uncrossable(ref));
    CHECK(us.counterexample == up.counterexample);
    CHECK(ws.counterexample == wp.counterexample);
    if (ws.counterexample) {
      const auto [a, b] = *ws.counterexample;
      CHECK(oracle::derived_members(ref, oracle::to_mask(a), oracle::to_mask(b)) < 2);
    }
    unc += us.holds;
    weak += ws.holds;
  }
  CHECK(unc > 10);
  CHECK(weak > unc);
  CHECK(weak < 400);
}

TEST_CASE("deficient families: uncrossable for even p, weakly uncrossable for odd p") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int p = 1 + static_cast<int>(seed % 4);
    const int n = 5 + static_cast<int>(seed % 3);
    const auto inst = fixtures::instance(seed, n, 3 * n, p, 1, 0.3);
    const CutFamily fam = deficient_cuts(inst, inst.graph.all_edges());
    const auto ref = to_oracle(fam);
    CAPTURE(seed);
    if (p % 2 == 0) {
      CHECK(check_uncrossable(fam).holds);
      CHECK(oracle::uncrossable(ref));
    } else {
      CHECK(check_weakly_uncrossable(fam).holds);
      CHECK(oracle::weakly_uncrossable(ref));
    }
  }
}

TEST_CASE("violated collections and minimal violated sets match the oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto g = fixtures::random_graph(rng(), n, 3 + static_cast<int>(rng() % 8), 0.5);
    const CutFamily fam = random_family(rng, n, 40);
    const EdgeSet f = fixtures::random_subset(rng, g.all_edges(), 30);
    const auto ref = to_oracle(fam);
    const auto vc = violated_collections(fam, g, f);
    CAPTURE(trial);
    CHECK(vc.violated == to_sets(oracle::violated(ref, g, oracle::ids(f))));
    CHECK(vc.minimal == to_sets(oracle::minimal_violated(ref, g, oracle::ids(f))));
    CHECK(FamilyOracle(g, fam).minimal_violated(f) == vc.minimal);
  }
}

TEST_CASE("property P1 verdict matches the oracle") {
  std::mt19937_64 rng(29);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const auto g = fixtures::random_graph(rng(), n, 4 + static_cast<int>(rng() % 6), 0.5);
    const CutFamily fam = random_family(rng, n, 50);
    const EdgeSet f = fixtures::random_subset(rng, g.all_edges(), 20);
    const std::vector<EdgeSet> samples{f};
    const P1Check s = check_property_P1(fam, g, samples, ExecutionMode::kSerial);
    const P1Check p = check_property_P1(fam, g, samples, ExecutionMode::kParallel);
    CAPTURE(trial);
    CHECK(s.holds == oracle::p1_holds(to_oracle(fam), g, oracle::ids(f)));
    CHECK(s.holds == p.holds);
    CHECK(s.triples_checked == p.triples_checked);
    if (!s.holds) {
      ++failures;
      const auto& cx = *s.counterexample;
      CHECK(cx.s1 == p.counterexample->s1);
      CHECK(cx.s2 == p.counterexample->s2);
      CHECK(cx.c == p.counterexample->c);
      CHECK(cx.leftover.any());
      const bool leftover_violated = fam.h(cx.leftover) && !boundary(g, cx.leftover).intersects(f);
      CHECK_FALSE(leftover_violated);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("P1 holds on odd-p deficient families and both readings agree") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int p = seed % 2 ? 3 : 1;
    const int n = 5 + static_cast<int>(seed % 3);
    const auto inst = fixtures::instance(seed, n, 3 * n, p, 1, 0.3);
    const EdgeSet f1 = inst.graph.all_edges() - EdgeSet{0};
    if (!is_feasible(FgcInstance{inst.graph, p, 1}, f1).feasible) continue;
    const CutFamily fam = deficient_cuts(FgcInstance{inst.graph, p, 2}, f1);
    std::mt19937_64 rng(seed);
    std::vector<EdgeSet> samples{EdgeSet{}};
    for (int s = 0; s < 20; ++s) samples.push_back(fixtures::random_subset(rng, EdgeSet{0}, 50));
    const FgcInstance inst2{inst.graph, p, 2};
    const JointP1Check joint = check_property_P1_joint(inst2, f1, fam, samples);
    CAPTURE(seed);
    CHECK(joint.readings_agree);
    CHECK(joint.check.holds);
    CHECK(check_property_P1(fam, inst.graph, samples).holds);
  }
}

TEST_CASE("parity identities on crossing deficient pairs") {
  int applicable = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int p = 1 + static_cast<int>(seed % 4);
    const int n = 5 + static_cast<int>(seed % 3);
    const auto inst = fixtures::instance(seed, n, 3 * n, p, 1, 0.4);
    const EdgeSet f1 = stage1_p1fgc(inst, Stage1Mode::kHeuristic);
    const CutFamily fam = deficient_cuts(inst, f1);
    const auto shores = fam.shores();
    for (std::size_t i = 0; i < shores.size(); ++i) {
      for (std::size_t j = i + 1; j < shores.size(); ++j) {
        for (const NodeSet& b : {shores[j], fam.all_nodes() - shores[j]}) {
          const ParityReport r = parity_check(inst.graph, f1, shores[i], b, p);
          CAPTURE(seed);
          CHECK(r.holds());
          applicable += r.applicable;
        }
      }
    }
  }
  CHECK(applicable > 20);
  const auto ring = fixtures::ring4(3, 2);
  const ParityReport r =
      parity_check(ring.graph, ring.graph.all_edges(), nodes({1, 2}), nodes({2, 3}), 3);
  CHECK(r.applicable);
  CHECK(r.holds());
  CHECK(parity_check(ring.graph, ring.graph.all_edges(), nodes({3}), nodes({1, 2}), 3).reason ==
        "shores do not cross");
}

TEST_CASE("generating list precondition") {
  for (int k = 2; k <= 3; ++k) {
    const Counterexample cx = build_counterexample(k);
    CHECK(generating_list_check(cx.generating).holds);
    CHECK(check_weakly_uncrossable(*cx.family).holds);
    CHECK_FALSE(check_uncrossable(*cx.family).holds);
  }
  const std::vector<NodeSet> bad{nodes({1, 2}), nodes({2, 3})};
  const PairCheck r = generating_list_check(bad);
  CHECK_FALSE(r.holds);
  CHECK(format_pair(*r.counterexample) == "({1,2},{2,3})");
}
