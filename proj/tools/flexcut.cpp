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

// flexcut: command-line front end.
//
// Each subcommand prints a table, or JSON with --json; --report PATH also
// writes the JSON to a file. Exit status: 0 when every check passes, 1 when a
// check or certificate fails, 2 on bad input or exhausted budgets.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flexcut/counterexample.hpp"
#include "flexcut/errors.hpp"
#include "flexcut/exact.hpp"
#include "flexcut/family.hpp"
#include "flexcut/fgc.hpp"
#include "flexcut/generator.hpp"
#include "flexcut/io.hpp"
#include "flexcut/pipeline.hpp"
#include "flexcut/report.hpp"

namespace {

using namespace flexcut;

struct Output {
  bool json = false;
  std::string report;

  // Returns `code` so callers can `return out.emit(...)`.
  int emit(const Json& j, const std::string& table, int code) const {
    if (!report.empty()) {
      std::ofstream f(report);
      if (!f) throw ParseError("cannot write " + report);
      f << j.dump(2) << '\n';
    }
    if (json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << table;
    }
    return code;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_flag("--json", out.json, "Print JSON instead of a table");
  cmd->add_option("--report", out.report, "Also write the JSON report to this file");
}

std::string row(const std::string& key, const std::string& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-26s", key.c_str());
  return std::string(buf) + value + "\n";
}

FgcInstance load(const std::string& path, std::optional<int> p, std::optional<int> q) {
  FgcInstance inst = read_instance_file(path);
  if (p) inst.p = *p;
  if (q) inst.q = *q;
  return inst;
}

int cmd_verify(const std::string& input, std::optional<int> p, std::optional<int> q,
               const std::string& edges, const Output& out) {
  const FgcInstance inst = load(input, p, q);
  const EdgeSet f = edges.empty() ? inst.graph.all_edges() : parse_edge_list(edges);
  if (!f.is_subset_of(inst.graph.all_edges())) throw ParseError("edge id out of range");
  const FeasibilityResult r = is_feasible(inst, f);
  Json j;
  j["p"] = inst.p;
  j["q"] = inst.q;
  j["edges"] = to_json(f);
  j["feasible"] = r.feasible;
  std::string table = row("instance", input) +
                      row("(p,q)", "(" + std::to_string(inst.p) + "," +
                                       std::to_string(inst.q) + ")") +
                      row("feasible", r.feasible ? "yes" : "no");
  if (r.witness) {
    j["witness"] = {{"shore", to_json(r.witness->shore.canonical())},
                    {"total", r.witness->total_edges},
                    {"unsafe", r.witness->unsafe_edges}};
    table += row("witness", format_witness(*r.witness));
  }
  return out.emit(j, table, r.feasible ? 0 : 1);
}

int cmd_solve(const std::string& input, const std::string& stage1, bool strict,
              bool compare_exact, const Output& out) {
  const FgcInstance inst = load(input, std::nullopt, 2);
  PipelineOptions opts;
  opts.stage1 = stage1 == "heuristic" ? Stage1Mode::kHeuristic : Stage1Mode::kExact;
  opts.strict = strict;
  const PipelineResult r = solve_p2fgc(inst, opts);
  Json j = to_json(r);
  j["stage1_mode"] = to_string(opts.stage1);
  std::string table =
      row("instance", input) + row("p, branch", std::to_string(inst.p) + ", " +
                                                     to_string(r.parity_branch)) +
      row("stage 1 (" + std::string(to_string(opts.stage1)) + ")",
          format_edge_set(r.stage1_edges) + "  cost " + format_cost(r.stage1_cost)) +
      row("deficient cuts", std::to_string(r.family_stats.deficient_count)) +
      row("augmentation", format_edge_set(r.augmentation_edges) + "  cost " +
                              format_cost(r.augmentation_cost)) +
      row("total cost", format_cost(r.total_cost)) +
      row("dual sum", format_fraction(r.certificates.dual_sum)) +
      row("certificates (beta=" + std::to_string(r.certificates.beta) + ")",
          r.certificates.ok() ? "PASS" : "FAIL");
  for (const auto& f : r.certificates.failures) table += row("  failure", f);
  if (compare_exact) {
    try {
      const ExactSolution opt = exact_min_cost_feasible(inst);
      const Rational ratio = opt.cost == 0 ? Rational(1) : r.total_cost / opt.cost;
      j["exact"] = to_json(opt);
      j["ratio"] = to_json(ratio);
      table += row("exact optimum", format_edge_set(opt.edges) + "  cost " +
                                        format_cost(opt.cost)) +
               row("ratio", format_fraction(ratio) + " (" + std::to_string(to_double(ratio)) +
                                ")");
    } catch (const BudgetError& e) {
      j["exact"] = {{"skipped", e.what()}};
      table += row("exact optimum", std::string("skipped: ") + e.what());
    }
  }
  return out.emit(j, table, r.certificates.ok() ? 0 : 1);
}

int cmd_exact(const std::string& input, std::optional<int> p, std::optional<int> q,
              bool golden, const Output& out) {
  const FgcInstance inst = load(input, p, q);
  const ExactSolution sol = exact_min_cost_feasible(inst);
  Json j = to_json(sol);
  j["golden"] = golden_line(inst, sol);
  if (golden && !out.json) {
    std::cout << golden_line(inst, sol) << '\n';
    return out.emit(j, "", 0);
  }
  return out.emit(j,
                  row("optimum edges", format_edge_set(sol.edges)) +
                      row("optimum cost", format_cost(sol.cost)) +
                      row("search nodes", std::to_string(sol.explored)),
                  0);
}

int cmd_check_family(const std::string& path, int n, const std::string& mode,
                     const Output& out) {
  const std::string text = read_text_file(path);
  const CutFamily fam = parse_family(text, n);
  PairCheck r;
  if (mode == "uncrossable") {
    r = check_uncrossable(fam);
  } else if (mode == "weak") {
    r = check_weakly_uncrossable(fam);
  } else {
    r = generating_list_check(fam.shores());
  }
  Json j;
  j["mode"] = mode;
  j["size"] = fam.size();
  j["holds"] = r.holds;
  std::string line = "PASS\n";
  if (r.counterexample) {
    j["pair"] = {to_json(r.counterexample->first), to_json(r.counterexample->second)};
    line = "FAIL pair=" + format_pair(*r.counterexample) + "\n";
  }
  return out.emit(j, line, r.holds ? 0 : 1);
}

int cmd_counterexample(int k, const std::string& graph_out, const std::string& family_out,
                       const Output& out) {
  const bool explicit_family = k <= kMaxExplicitK;
  const Counterexample cx = build_counterexample(k, explicit_family);
  if (!graph_out.empty()) {
    std::ofstream(graph_out) << write_instance(FgcInstance{cx.graph, 1, 0});
  }
  if (!family_out.empty()) {
    if (!cx.family) throw BudgetError("family is implicit for k > " +
                                      std::to_string(kMaxExplicitK));
    std::ofstream f(family_out);
    for (const auto& s : cx.family->shores()) f << "S=" << format_node_set(s) << '\n';
  }
  GapOptions opts;
  opts.exact_max_k = 0;
  const GapRow r = run_gap_experiment(k, k, opts).front();
  Json j = to_json(r);
  j["nodes"] = cx.layout.node_count();
  j["edges"] = cx.layout.edge_count();
  j["generating_sets"] = cx.layout.generating_count();
  if (cx.family) j["family_shores"] = cx.family->size();
  std::string table = row("k", std::to_string(k)) +
                      row("nodes / edges", std::to_string(cx.layout.node_count()) + " / " +
                                               std::to_string(cx.layout.edge_count())) +
                      row("generating sets", std::to_string(cx.layout.generating_count())) +
                      row("primal-dual cost", format_cost(r.pd_cost)) +
                      row("picked type-A only", r.picked_type_a ? "yes" : "no") +
                      row("reverse-deleted", std::to_string(r.deleted));
  std::string waves;
  for (const auto& w : r.waves) waves += (waves.empty() ? "" : " ") + format_fraction(w);
  table += row("epsilon waves", waves);
  return out.emit(j, table, r.picked_type_a && r.deleted == 0 ? 0 : 1);
}

int cmd_gap(int kmin, int kmax, int exact_max_k, const Output& out) {
  GapOptions opts;
  opts.exact_max_k = exact_max_k;
  const auto rows = run_gap_experiment(kmin, kmax, opts);
  Json j = Json::array();
  std::string table = " k  oracle    pd_cost  dual_sum      opt      2k  ratio     deleted\n";
  bool ok = true;
  for (const auto& r : rows) {
    j.push_back(to_json(r));
    ok = ok && r.picked_type_a && r.deleted == 0 && r.cover_bound_feasible;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%2d  %-8s  %7s  %-12s  %-6s  %3s  %-8.4f  %zu\n", r.k,
                  r.implicit_oracle ? "implicit" : "explicit", format_cost(r.pd_cost).c_str(),
                  format_fraction(r.dual_sum).c_str(),
                  r.exact_opt ? format_cost(*r.exact_opt).c_str() : "-",
                  format_cost(r.cover_bound).c_str(), to_double(r.ratio), r.deleted);
    table += buf;
  }
  return out.emit(j, table, ok ? 0 : 1);
}

int cmd_gen(std::uint64_t seed, const GeneratorParams& params, const std::string& output,
            const Output& out) {
  const FgcInstance inst = generate_random_instance(seed, params);
  const std::string text = write_instance(inst);
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw ParseError("cannot write " + output);
    f << text;
  }
  Json j;
  j["seed"] = seed;
  j["instance"] = text;
  j["hash"] = instance_hash(inst);
  return out.emit(j, output.empty() ? text : row("wrote", output), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexible graph connectivity: (p,2) solvers, family checks, experiments"};
  app.require_subcommand(1);
  Output out;
  int code = 0;

  std::string input, edges, stage1 = "exact", family, mode = "weak", graph_out, family_out,
                                output;
  std::optional<int> p, q;
  bool no_strict = false, compare_exact = false, golden = false;
  int n = 0, k = 2, kmin = 2, kmax = 6, exact_max_k = 4;
  std::uint64_t seed = 1;
  GeneratorParams gen;

  auto* verify = app.add_subcommand("verify", "Check (p,q)-feasibility of an edge set");
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--p", p, "Override p");
  verify->add_option("--q", q, "Override q");
  verify->add_option("--edges", edges, "Edge ids, e.g. 0,2,5 (default: all)");
  add_output_flags(verify, out);
  verify->callback([&] { code = cmd_verify(input, p, q, edges, out); });

  auto* solve = app.add_subcommand("solve", "Run the two-stage (p,2) pipeline");
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--stage1", stage1, "Stage-1 mode")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  solve->add_flag("--no-strict", no_strict, "Report certificate failures instead of aborting");
  solve->add_flag("--compare-exact", compare_exact, "Also compute the exact optimum");
  add_output_flags(solve, out);
  solve->callback([&] { code = cmd_solve(input, stage1, !no_strict, compare_exact, out); });

  auto* exact = app.add_subcommand("exact", "Exact minimum-cost feasible edge set");
  exact->add_option("--input", input, "Instance file")->required();
  exact->add_option("--p", p, "Override p");
  exact->add_option("--q", q, "Override q");
  exact->add_flag("--golden", golden, "Print the golden-file line");
  add_output_flags(exact, out);
  exact->callback([&] { code = cmd_exact(input, p, q, golden, out); });

  auto* check = app.add_subcommand("check-family", "Structural checks on a cut family");
  check->add_option("--family", family, "Family file")->required();
  check->add_option("--n", n, "Node count")->required();
  check->add_option("--mode", mode, "Check to run")
      ->check(CLI::IsMember({"uncrossable", "weak", "generating"}));
  add_output_flags(check, out);
  check->callback([&] { code = cmd_check_family(family, n, mode, out); });

  auto* cx = app.add_subcommand("counterexample", "Build and run the gap instance for one k");
  cx->add_option("--k", k, "Size parameter")->check(CLI::Range(2, 12));
  cx->add_option("--graph-out", graph_out, "Write the graph here");
  cx->add_option("--family-out", family_out, "Write the family here (k <= 4)");
  add_output_flags(cx, out);
  cx->callback([&] { code = cmd_counterexample(k, graph_out, family_out, out); });

  auto* gap = app.add_subcommand("gap", "Primal-dual cost against the optimum over k");
  gap->add_option("--kmin", kmin, "Smallest k")->check(CLI::Range(2, 12));
  gap->add_option("--kmax", kmax, "Largest k")->check(CLI::Range(2, 12));
  gap->add_option("--exact-max-k", exact_max_k, "Compute exact optima up to this k");
  add_output_flags(gap, out);
  gap->callback([&] { code = cmd_gap(kmin, kmax, exact_max_k, out); });

  auto* g = app.add_subcommand("gen", "Generate a random feasible instance");
  g->add_option("--seed", seed, "Seed");
  g->add_option("--n", gen.n, "Nodes");
  g->add_option("--m", gen.m, "Edges");
  g->add_option("--p", gen.p, "p");
  g->add_option("--q", gen.q, "q the instance must satisfy");
  g->add_option("--safe-prob", gen.safe_prob, "Probability an edge is safe");
  g->add_option("--cost-lo", gen.cost_lo, "Smallest integer cost");
  g->add_option("--cost-hi", gen.cost_hi, "Largest integer cost");
  g->add_option("--output", output, "Write the instance here");
  add_output_flags(g, out);
  g->callback([&] { code = cmd_gen(seed, gen, output, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CertificateError& e) {
    std::cerr << "flexcut: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "flexcut: " << e.what() << '\n';
    return 2;
  }
  return code;
}
