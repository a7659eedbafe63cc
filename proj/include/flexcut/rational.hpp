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

#ifndef FLEXCUT_RATIONAL_HPP_
#define FLEXCUT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flexcut {

// Exact arithmetic for costs, duals and slacks.
using Rational = mpq_class;

// Accepts "3", "-2", "1.25", ".5", "7/4". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "1/2", "3/1", "0/1".
std::string format_fraction(const Rational& r);

// Shortest faithful form: "3", "1/2". Used for the graph text format.
std::string format_cost(const Rational& r);

double to_double(const Rational& r);

}  // namespace flexcut

#endif  // FLEXCUT_RATIONAL_HPP_
