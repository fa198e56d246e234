// Copyright 2026 The Authors.
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

#ifndef XMATROID_ELEMENT_SET_H_
#define XMATROID_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace xmatroid {

inline constexpr int kMaxElements = 64;

/// Subset of a ground set {0, ..., n-1} with n <= 64, stored as one word.
///
/// The ordering operators implement the canonical order used for every
/// reported witness: first by cardinality, then by numeric bit value.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> ids);

  static constexpr ElementSet Singleton(int e) {
    return ElementSet(uint64_t{1} << e);
  }
  /// {0, ..., n-1}.
  static constexpr ElementSet Full(int n) {
    return ElementSet(n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
  }
  static ElementSet FromIds(std::span<const int> ids);

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool IsSubsetOf(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool Intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }
  /// Lowest element, or -1 for the empty set.
  constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  /// Highest element, or -1 for the empty set.
  constexpr int max() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  constexpr ElementSet With(int e) const {
    return ElementSet(bits_ | (uint64_t{1} << e));
  }
  constexpr ElementSet Without(int e) const {
    return ElementSet(bits_ & ~(uint64_t{1} << e));
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr bool operator<(ElementSet a, ElementSet b) {
    const int ca = a.size(), cb = b.size();
    return ca != cb ? ca < cb : a.bits_ < b.bits_;
  }
  friend constexpr bool operator>(ElementSet a, ElementSet b) { return b < a; }
  friend constexpr bool operator<=(ElementSet a, ElementSet b) { return !(b < a); }
  friend constexpr bool operator>=(ElementSet a, ElementSet b) { return !(a < b); }

  class Iterator {
   public:
    constexpr explicit Iterator(uint64_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    friend constexpr bool operator==(Iterator a, Iterator b) = default;

   private:
    uint64_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> ids() const;
  /// "{0,3,5}".
  std::string ToString() const;

 private:
  uint64_t bits_ = 0;
};

struct ElementSetHash {
  size_t operator()(ElementSet s) const noexcept {
    // splitmix64 finalizer
    uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<size_t>(z ^ (z >> 31));
  }
};

/// Calls fn(subset) for every subset of `set`, including the empty set and
/// `set` itself, in increasing numeric order.
template <typename Fn>
void ForEachSubset(ElementSet set, Fn&& fn) {
  const uint64_t mask = set.bits();
  uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Calls fn(subset) for every k-element subset of {0, ..., n-1} in
/// increasing numeric order, for n <= 63. Stops early when fn returns false.
template <typename Fn>
void ForEachKSubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(ElementSet());
    return;
  }
  const uint64_t limit = uint64_t{1} << n;
  uint64_t v = (uint64_t{1} << k) - 1;
  while (v < limit) {
    if (!fn(ElementSet(v))) return;
    // Gosper's hack.
    const uint64_t c = v & (~v + 1);
    const uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

/// Same as ForEachKSubset but over the k-subsets of an arbitrary `pool`.
template <typename Fn>
void ForEachKSubsetOf(ElementSet pool, int k, Fn&& fn) {
  const std::vector<int> ids = pool.ids();
  const int n = static_cast<int>(ids.size());
  ForEachKSubset(n, k, [&](ElementSet local) {
    uint64_t bits = 0;
    for (int i : local) bits |= uint64_t{1} << ids[i];
    return fn(ElementSet(bits));
  });
}

}  // namespace xmatroid

#endif  // XMATROID_ELEMENT_SET_H_
