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
#include "flexcut/errors.hpp"
#include "flexcut/exact.hpp"
#include "flexcut/family.hpp"
#include "flexcut/pipeline.hpp"
#include "flexcut/primal_dual.hpp"
#include "oracles.hpp"

using namespace flexcut;
using fixtures::nodes;

namespace {

// Deficient family of a minimal stage-1 solution, with the augmentation pool.
struct Augmentation {
  FgcInstance inst;
  EdgeSet f1;
  CutFamily fam;
};

Augmentation augmentation(std::uint64_t seed, int p, int cost_hi = 1) {
  const int n = 5 + static_cast<int>(seed % 3);
  auto inst = fixtures::instance(seed, n, 3 * n, p, 2, 0.4, cost_hi);
  const EdgeSet f1 = stage1_p1fgc(inst, Stage1Mode::kHeuristic);
  CutFamily fam = deficient_cuts(inst, f1);
  return {std::move(inst), f1, std::move(fam)};
}

}  // namespace

namespace {

// Nodes 0-1-2 with a direct 0-2 edge; family {1}, {2} (and complements).
LabeledMultigraph path3() {
  return LabeledMultigraph(3, {{0, 1, Rational(2), Safety::kSafe},
                               {1, 2, Rational(2), Safety::kSafe},
                               {0, 2, Rational(3), Safety::kSafe}});
}

CutFamily path3_family() { return CutFamily(3, std::vector<NodeSet>{nodes({1}), nodes({2})}); }

}  // namespace

TEST_CASE("path of three nodes: one iteration by hand") {
  const LabeledMultigraph g = path3();
  const FamilyOracle oracle(g, path3_family());
  CHECK(oracle.minimal_violated(EdgeSet{}) == std::vector<NodeSet>{nodes({1}), nodes({2})});

  // Ratios slack/count: 2/1, 2/2, 3/1.
  const PrimalDualResult run = run_primal_dual(g, oracle);
  REQUIRE(run.trace.iterations.size() == 1);
  CHECK(run.trace.iterations[0].epsilon == 1);
  CHECK(run.trace.iterations[0].tight_edge == 1);
  CHECK(run.edges == EdgeSet{1});
  CHECK(run.duals.y(nodes({1})) == 1);
  CHECK(run.duals.y(nodes({2})) == 1);
  CHECK(run.duals.y(nodes({0, 2})) == 0);
  CHECK(run.duals.slack(0) == 1);
  CHECK(run.duals.slack(2) == 2);
  const auto report = verify_certificates(g, oracle, run, FamilyClass::kUncrossable);
  CHECK(report.ok());
  CHECK(report.cost == 2);
  CHECK(report.dual_sum == 2);
  CHECK(report.max_iteration_ratio == 1);
}

TEST_CASE("reverse delete drops redundant edges in reverse addition order") {
  const LabeledMultigraph g(3, {{0, 1, Rational(1), Safety::kSafe},
                                {0, 1, Rational(1), Safety::kSafe},
                                {1, 2, Rational(1), Safety::kSafe}});
  const CutFamily fam(3, std::vector<NodeSet>{nodes({1, 2})});
  const FamilyOracle oracle(g, fam);
  std::vector<int> deleted;
  const EdgeSet kept = reverse_delete({0, 2, 1}, oracle, &deleted);
  CHECK(deleted == std::vector<int>{1, 2});
  CHECK(kept == EdgeSet{0});
}

TEST_CASE("uncoverable family is rejected") {
  const LabeledMultigraph g(3, {{0, 1, Rational(1), Safety::kSafe}});
  const CutFamily fam(3, std::vector<NodeSet>{nodes({2})});
  CHECK_THROWS_AS(run_primal_dual(g, FamilyOracle(g, fam)), InfeasibleError);
  CHECK_THROWS_AS(FamilyOracle(g, CutFamily(4)), ContractError);
}

TEST_CASE("ring family: output covers every shore and certificates hold") {
  const auto inst = fixtures::ring4(3, 2);
  const CutFamily fam = deficient_cuts(inst, inst.graph.all_edges());
  const FamilyOracle oracle(inst.graph, fam);
  const PrimalDualResult run = run_primal_dual(inst.graph, oracle);
  const auto ref = oracle::make_family(4, {0b1000, 0b0110, 0b1100, 0b1110});
  CHECK(oracle::minimal_violated(ref, inst.graph, oracle::ids(run.edges)).empty());
  const auto report = verify_certificates(inst.graph, oracle, run,
                                          FamilyClass::kWeaklyUncrossableP1, {true});
  CHECK(report.ok());
  CHECK(report.witnesses_checked);
}

TEST_CASE("even-p augmentation: 2-approximate certificates and weak duality") {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int p = seed % 2 ? 2 : 4;
    const auto a = augmentation(seed, p, 1 + static_cast<int>(seed % 4));
    if (a.fam.empty()) continue;
    ++nontrivial;
    const auto& g = a.inst.graph;
    const FamilyOracle oracle(g, a.fam);
    const EdgeSet pool = g.all_edges() - a.f1;
    const PrimalDualResult run = run_primal_dual(g, oracle, pool);
    const auto report = verify_certificates(g, oracle, run, FamilyClass::kUncrossable);
    CAPTURE(seed);
    CHECK(report.ok());
    CHECK(run.edges.is_subset_of(pool));
    const ExactSolution opt = exact_min_cost_cover(a.fam, g, pool);
    CHECK(report.dual_sum <= opt.cost);
    CHECK(report.cost <= 2 * opt.cost);
  }
  CHECK(nontrivial > 15);
}

TEST_CASE("odd-p augmentation: 16-factor certificates and witnesses") {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int p = seed % 2 ? 1 : 3;
    const auto a = augmentation(seed, p, 1 + static_cast<int>(seed % 4));
    if (a.fam.empty()) continue;
    ++nontrivial;
    const auto& g = a.inst.graph;
    const FamilyOracle oracle(g, a.fam);
    const PrimalDualResult run = run_primal_dual(g, oracle, g.all_edges() - a.f1);
    const auto report =
        verify_certificates(g, oracle, run, FamilyClass::kWeaklyUncrossableP1, {true});
    CAPTURE(seed);
    CHECK(report.ok());
    for (std::size_t t = 0; t < run.trace.iterations.size(); ++t) {
      for (int e : run.edges.members()) {
        auto w = find_witness(g, e, t, run.trace, oracle);
        if (!w) continue;
        CHECK(a.fam.h(*w));
        CHECK((boundary(g, *w) & run.edges) == EdgeSet{e});
      }
    }
  }
  CHECK(nontrivial > 15);
}

TEST_CASE("runs are deterministic") {
  const auto a = augmentation(7, 3);
  const FamilyOracle oracle(a.inst.graph, a.fam);
  const EdgeSet pool = a.inst.graph.all_edges() - a.f1;
  const auto r1 = run_primal_dual(a.inst.graph, oracle, pool);
  const auto r2 = run_primal_dual(a.inst.graph, oracle, pool);
  CHECK(r1.trace.added == r2.trace.added);
  CHECK(r1.trace.deleted == r2.trace.deleted);
  CHECK(r1.duals.raised() == r2.duals.raised());
}

TEST_CASE("certificate checker catches tampering") {
  const LabeledMultigraph g = path3();
  const FamilyOracle oracle(g, path3_family());
  const PrimalDualResult run = run_primal_dual(g, oracle);

  PrimalDualResult extra = run;
  extra.edges.set(2);
  const auto r1 = verify_certificates(g, oracle, extra, FamilyClass::kUncrossable);
  CHECK_FALSE(r1.complementary_slackness);
  CHECK_FALSE(r1.cost_identity);

  PrimalDualResult bumped = run;
  bumped.duals.raise(nodes({1}), Rational(1));
  const auto r2 = verify_certificates(g, oracle, bumped, FamilyClass::kUncrossable);
  CHECK_FALSE(r2.dual_feasible);
  CHECK_THROWS_AS(enforce(r2), CertificateError);

  PrimalDualResult none = run;
  none.edges = EdgeSet{};
  const auto r3 = verify_certificates(g, oracle, none, FamilyClass::kUncrossable);
  CHECK_FALSE(r3.output_feasible);
}
