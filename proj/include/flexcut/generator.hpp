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

#ifndef FLEXCUT_GENERATOR_HPP_
#define FLEXCUT_GENERATOR_HPP_

#include <cstdint>

#include "flexcut/fgc.hpp"

namespace flexcut {

struct GeneratorParams {
  int n = 6;
  int m = 12;
  int p = 2;
  int q = 2;  // the instance must be (p,q)-feasible
  double safe_prob = 0.5;
  int cost_lo = 1;
  int cost_hi = 1;
  int max_retries = 2000;
};

// Random spanning tree plus m-n+1 uniform extra edges, retried until
// (p,q)-feasible. The same seed gives the same instance on every platform.
// Throws BudgetError when retries run out.
FgcInstance generate_random_instance(std::uint64_t seed, const GeneratorParams& params);

}  // namespace flexcut

#endif  // FLEXCUT_GENERATOR_HPP_
