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

#include "flexcut/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "flexcut/errors.hpp"

namespace flexcut {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view s, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                     std::string(s) + "'");
  }
  return value;
}

template <typename Bits>
Bits parse_list(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced braces in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  Bits out;
  while (!(text = trim(text)).empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    const int v = to_int(item, 0);
    if (v < 0 || v >= Bits::kCapacity) {
      throw ParseError("index " + std::to_string(v) + " out of range");
    }
    out.set(v);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

}  // namespace

NodeSet parse_node_list(std::string_view text) { return parse_list<NodeSet>(text); }
EdgeSet parse_edge_list(std::string_view text) { return parse_list<EdgeSet>(text); }

FgcInstance parse_instance(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty instance");
  const auto head = fields(lines[0].second);
  if (head.size() != 4) {
    throw ParseError("line " + std::to_string(lines[0].first) + ": expected 'n m p q'");
  }
  const int n = to_int(head[0], lines[0].first);
  const int m = to_int(head[1], lines[0].first);
  const int p = to_int(head[2], lines[0].first);
  const int q = to_int(head[3], lines[0].first);
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<LabeledMultigraph::EdgeSpec> edges;
  for (int k = 1; k <= m; ++k) {
    const auto [number, line] = lines[k];
    const auto f = fields(line);
    if (f.size() != 4) {
      throw ParseError("line " + std::to_string(number) + ": expected 'u v cost S|U'");
    }
    Safety safety;
    if (f[3] == "S") {
      safety = Safety::kSafe;
    } else if (f[3] == "U") {
      safety = Safety::kUnsafe;
    } else {
      throw ParseError("line " + std::to_string(number) + ": safety must be S or U");
    }
    Rational cost;
    try {
      cost = parse_rational(f[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
    edges.push_back({to_int(f[0], number), to_int(f[1], number), std::move(cost), safety});
  }
  if (p < 1 || q < 0) throw ParseError("need p >= 1 and q >= 0");
  try {
    return FgcInstance{LabeledMultigraph(n, std::move(edges)), p, q};
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

std::string write_instance(const FgcInstance& inst) {
  std::ostringstream os;
  const auto& g = inst.graph;
  os << g.node_count() << ' ' << g.edge_count() << ' ' << inst.p << ' ' << inst.q << '\n';
  for (const auto& e : g.edges()) {
    os << e.u << ' ' << e.v << ' ' << format_cost(e.cost) << ' ' << (e.unsafe() ? 'U' : 'S')
       << '\n';
  }
  return os.str();
}

CutFamily parse_family(std::string_view text, int node_count) {
  std::vector<NodeSet> shores;
  for (const auto& [number, line] : content_lines(text)) {
    if (line.substr(0, 2) != "S=") {
      throw ParseError("line " + std::to_string(number) + ": expected 'S={...}'");
    }
    shores.push_back(parse_node_list(line.substr(2)));
  }
  try {
    return CutFamily(node_count, shores);
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FgcInstance read_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

CutFamily read_family_file(const std::string& path, int node_count) {
  return parse_family(read_text_file(path), node_count);
}

}  // namespace flexcut
