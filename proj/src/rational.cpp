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

#include "flexcut/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flexcut {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + original + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + original + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
  } else {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)) ||
        (dot != std::string_view::npos && frac.empty() && whole.empty())) {
      throw std::invalid_argument("malformed rational: '" + original + "'");
    }
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(num, den);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_cost(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace flexcut
