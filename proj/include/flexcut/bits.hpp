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

#ifndef FLEXCUT_BITS_HPP_
#define FLEXCUT_BITS_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace flexcut {

// Fixed-capacity bit set. The tag keeps node sets and edge sets from being
// mixed up at compile time.
template <typename Tag, std::size_t Words>
class FixedBits {
 public:
  static constexpr int kCapacity = static_cast<int>(Words * 64);

  constexpr FixedBits() = default;
  FixedBits(std::initializer_list<int> items) {
    for (int i : items) set(i);
  }

  static FixedBits from_word(std::uint64_t w) {
    FixedBits b;
    b.w_[0] = w;
    return b;
  }

  // All indices in [0, count).
  static FixedBits prefix(int count) {
    FixedBits b;
    for (std::size_t k = 0; k < Words && count > 0; ++k) {
      const int here = count >= 64 ? 64 : count;
      b.w_[k] = here == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << here) - 1);
      count -= here;
    }
    return b;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : w_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  // Smallest member, or -1.
  int first() const {
    for (std::size_t k = 0; k < Words; ++k) {
      if (w_[k] != 0) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    }
    return -1;
  }

  bool is_subset_of(const FixedBits& o) const {
    for (std::size_t k = 0; k < Words; ++k) {
      if ((w_[k] & ~o.w_[k]) != 0) return false;
    }
    return true;
  }
  bool intersects(const FixedBits& o) const {
    for (std::size_t k = 0; k < Words; ++k) {
      if ((w_[k] & o.w_[k]) != 0) return true;
    }
    return false;
  }

  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  FixedBits& operator^=(const FixedBits& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  // Set difference.
  FixedBits& operator-=(const FixedBits& o) {
    for (std::size_t k = 0; k < Words; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend FixedBits operator&(FixedBits a, const FixedBits& b) { return a &= b; }
  friend FixedBits operator|(FixedBits a, const FixedBits& b) { return a |= b; }
  friend FixedBits operator^(FixedBits a, const FixedBits& b) { return a ^= b; }
  friend FixedBits operator-(FixedBits a, const FixedBits& b) { return a -= b; }

  friend bool operator==(const FixedBits&, const FixedBits&) = default;

  // Orders by the sorted member list, lexicographically ({0,5} < {1} < {1,2}).
  friend bool lex_less(const FixedBits& a, const FixedBits& b) {
    const int i = (a ^ b).first();
    if (i < 0) return false;
    // Below i the sorted lists agree. The set holding i is smaller iff the
    // other one still has a member after i (otherwise the other is a prefix).
    auto has_member_above = [i](const FixedBits& s) {
      FixedBits rest = s - prefix(i + 1);
      return rest.any();
    };
    return a.test(i) ? has_member_above(b) : !has_member_above(a);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < Words; ++k) {
      std::uint64_t w = w_[k];
      while (w != 0) {
        out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t word(std::size_t k) const { return w_[k]; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, Words> w_{};
};

struct NodeTag {};
struct EdgeTag {};

// Up to 256 nodes / 256 edges. Desk-scale instances only.
using NodeSet = FixedBits<NodeTag, 4>;
using EdgeSet = FixedBits<EdgeTag, 4>;

inline constexpr int kMaxNodes = NodeSet::kCapacity;
inline constexpr int kMaxEdges = EdgeSet::kCapacity;

// Sets cross when all four of A∩B, A\B, B\A and V\(A∪B) are nonempty.
inline bool crosses(const NodeSet& a, const NodeSet& b, const NodeSet& all) {
  return a.intersects(b) && (a - b).any() && (b - a).any() && (all - (a | b)).any();
}

// Size first, then lexicographic. Used wherever family output must be stable.
inline bool shore_order(const NodeSet& a, const NodeSet& b) {
  const int ca = a.count();
  const int cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace flexcut

template <typename Tag, std::size_t Words>
struct std::hash<flexcut::FixedBits<Tag, Words>> {
  std::size_t operator()(const flexcut::FixedBits<Tag, Words>& b) const noexcept {
    return b.hash();
  }
};

#endif  // FLEXCUT_BITS_HPP_
