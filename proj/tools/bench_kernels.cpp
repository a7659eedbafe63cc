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

// Serial against OpenMP timings for the data-parallel kernels. Each row also
// confirms both modes return the same answer.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "flexcut/counterexample.hpp"
#include "flexcut/family.hpp"
#include "flexcut/fgc.hpp"
#include "flexcut/generator.hpp"

namespace {

using namespace flexcut;

template <typename F>
double best_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

template <typename R>
void bench(const char* name, const std::function<R(ExecutionMode)>& kernel) {
  R serial{}, parallel{};
  const double ts = best_ms([&] { serial = kernel(ExecutionMode::kSerial); });
  const double tp = best_ms([&] { parallel = kernel(ExecutionMode::kParallel); });
  std::printf("%-34s %10.2f %10.2f %7.2fx  %s\n", name, ts, tp, ts / tp,
              serial == parallel ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  for (int n : {14, 16, 18}) {
    GeneratorParams params;
    params.n = n;
    params.m = 3 * n;
    params.p = 3;
    params.q = 1;
    params.safe_prob = 0.3;
    const FgcInstance inst = generate_random_instance(7, params);
    const FgcInstance q2{inst.graph, inst.p, 2};
    const EdgeSet all = inst.graph.all_edges();

    char name[64];
    std::snprintf(name, sizeof name, "deficient cuts n=%d", n);
    bench<std::vector<NodeSet>>(name, [&](ExecutionMode mode) {
      std::vector<NodeSet> out;
      for (const auto& w : deficient_cut_details(q2, all, ScanOptions{18, mode})) {
        out.push_back(w.shore.canonical());
      }
      return out;
    });
    std::snprintf(name, sizeof name, "feasibility scan n=%d", n);
    bench<bool>(name, [&](ExecutionMode mode) {
      return is_feasible(q2, all, ScanOptions{18, mode}).feasible;
    });
  }

  const Counterexample cx = build_counterexample(3);
  const std::vector<NodeSet> gen = cx.generating;
  bench<bool>("weakly uncrossable k=3 family", [&](ExecutionMode mode) {
    return check_weakly_uncrossable(*cx.family, mode).holds;
  });
  bench<bool>("uncrossable k=3 family", [&](ExecutionMode mode) {
    return check_uncrossable(*cx.family, mode).holds;
  });
  bench<bool>("generating-list precondition k=3", [&](ExecutionMode mode) {
    return generating_list_check(gen, mode).holds;
  });

  std::mt19937_64 rng(3);
  std::vector<EdgeSet> samples;
  for (int s = 0; s < 8; ++s) {
    EdgeSet f;
    for (int e = 0; e < cx.graph.edge_count(); ++e) {
      if (rng() & 1U) f.set(e);
    }
    samples.push_back(f);
  }
  bench<bool>("property P1 k=3, 8 samples", [&](ExecutionMode mode) {
    return check_property_P1(*cx.family, cx.graph, samples, mode).holds;
  });
  return 0;
}
