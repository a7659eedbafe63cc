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

#include "flexcut/report.hpp"

namespace flexcut {

Json to_json(const NodeSet& s) { return Json(s.members()); }
Json to_json(const EdgeSet& s) { return Json(s.members()); }
Json to_json(const Rational& r) { return format_fraction(r); }

Json to_json(const CertificateReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["beta"] = r.beta;
  j["cost"] = to_json(r.cost);
  j["dual_sum"] = to_json(r.dual_sum);
  j["dual_feasible"] = r.dual_feasible;
  j["nonnegative_duals"] = r.nonnegative_duals;
  j["complementary_slackness"] = r.complementary_slackness;
  j["cost_identity"] = r.cost_identity;
  j["per_iteration_bound"] = r.per_iteration_bound;
  j["max_iteration_ratio"] = to_json(r.max_iteration_ratio);
  j["total_bound"] = r.total_bound;
  j["active_disjoint"] = r.active_disjoint;
  j["output_feasible"] = r.output_feasible;
  if (r.witnesses_checked) {
    j["witnesses_ok"] = r.witnesses_ok;
    j["witness_queries"] = r.witness_queries;
  }
  j["failures"] = r.failures;
  return j;
}

Json to_json(const PrimalDualTrace& trace) {
  Json j;
  j["candidates"] = to_json(trace.candidates);
  Json iters = Json::array();
  for (const auto& it : trace.iterations) {
    Json active = Json::array();
    for (const auto& s : it.active) active.push_back(to_json(s));
    iters.push_back({{"active", active},
                     {"epsilon", to_json(it.epsilon)},
                     {"tight_edge", it.tight_edge}});
  }
  j["iterations"] = iters;
  j["added"] = trace.added;
  j["deleted"] = trace.deleted;
  j["final"] = to_json(trace.final_edges);
  return j;
}

Json to_json(const PipelineResult& r) {
  Json j;
  j["parity_branch"] = to_string(r.parity_branch);
  j["stage1_edges"] = to_json(r.stage1_edges);
  j["augmentation_edges"] = to_json(r.augmentation_edges);
  j["stage1_cost"] = to_json(r.stage1_cost);
  j["augmentation_cost"] = to_json(r.augmentation_cost);
  j["total_cost"] = to_json(r.total_cost);
  j["final_feasible"] = r.final_feasible;
  Json fam;
  fam["deficient_count"] = r.family_stats.deficient_count;
  Json shores = Json::array();
  for (const auto& s : r.deficient.shores()) shores.push_back(to_json(s));
  fam["deficient"] = shores;
  fam["uncrossable"] = r.family_stats.uncrossable;
  if (const auto& cx = r.family_stats.uncrossable_counterexample) {
    fam["uncrossable_counterexample"] = {to_json(cx->first), to_json(cx->second)};
  }
  fam["weakly_uncrossable"] = r.family_stats.weakly_uncrossable;
  if (const auto& p1 = r.family_stats.p1) {
    fam["p1_holds"] = p1->holds;
    fam["p1_samples"] = p1->samples_checked;
    fam["p1_triples"] = p1->triples_checked;
  }
  j["family"] = fam;
  j["certificates"] = to_json(r.certificates);
  j["trace"] = to_json(r.trace);
  return j;
}

Json to_json(const GapRow& row) {
  Json j;
  j["k"] = row.k;
  j["oracle"] = row.implicit_oracle ? "implicit" : "explicit";
  j["pd_cost"] = to_json(row.pd_cost);
  j["dual_sum"] = to_json(row.dual_sum);
  Json waves = Json::array();
  for (const auto& w : row.waves) waves.push_back(to_json(w));
  j["waves"] = waves;
  j["iterations"] = row.iterations;
  j["deleted"] = row.deleted;
  j["picked_type_a"] = row.picked_type_a;
  j["cover_bound"] = to_json(row.cover_bound);
  j["cover_bound_feasible"] = row.cover_bound_feasible;
  j["exact_opt"] = row.exact_opt ? to_json(*row.exact_opt) : Json(nullptr);
  j["exact_edges"] = row.exact_edges;
  j["ratio"] = to_json(row.ratio);
  j["ratio_basis"] = row.exact_opt ? "exact" : "bound";
  j["seconds"] = row.seconds;
  return j;
}

Json to_json(const ExactSolution& s) {
  Json j;
  j["edges"] = to_json(s.edges);
  j["cost"] = to_json(s.cost);
  j["explored"] = s.explored;
  return j;
}

}  // namespace flexcut
