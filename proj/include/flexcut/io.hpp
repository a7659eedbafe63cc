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

// Text formats.
//
// Instance file:
//   n m p q
//   u v cost S|U        (m lines; edge ids follow line order from 0)
//
// Family file: one canonical shore per line, "S={i,j,k}". Blank lines and
// lines starting with '#' are ignored in both formats.

#ifndef FLEXCUT_IO_HPP_
#define FLEXCUT_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "flexcut/cut_family.hpp"
#include "flexcut/fgc.hpp"

namespace flexcut {

// Parses without checking (p,q)-feasibility. Throws ParseError.
FgcInstance parse_instance(std::string_view text);
FgcInstance read_instance_file(const std::string& path);
std::string write_instance(const FgcInstance& inst);

CutFamily parse_family(std::string_view text, int node_count);
CutFamily read_family_file(const std::string& path, int node_count);

// "{1,4,7}" or "1,4,7" (braces optional, empty allowed).
NodeSet parse_node_list(std::string_view text);
EdgeSet parse_edge_list(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace flexcut

#endif  // FLEXCUT_IO_HPP_
