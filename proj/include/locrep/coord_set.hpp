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


#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "locrep/error.hpp"

namespace locrep {

// A set of coordinates of a code of length at most 64, stored as a bitmask.
// Coordinates are 0-based.
class CoordSet {
 public:
  static constexpr int kMaxCoords = 64;

  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint64_t mask) : mask_(mask) {}
  CoordSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }

  // Builds a set from a member list, rejecting duplicates and indices
  // outside [0, n).
  static CoordSet from_members(std::span<const int> members, int n) {
    CoordSet s;
    for (int m : members) {
      if (m < 0 || m >= n) {
        throw UsageError("coordinate " + std::to_string(m) + " out of range for length " +
                         std::to_string(n));
      }
      if (s.contains(m)) throw UsageError("duplicate coordinate " + std::to_string(m));
      s.insert(m);
    }
    return s;
  }

  static constexpr CoordSet full(int n) {
    return CoordSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1; }
  void insert(int i) {
    if (i < 0 || i >= kMaxCoords) throw UsageError("coordinate index out of range");
    mask_ |= std::uint64_t{1} << i;
  }
  void erase(int i) { mask_ &= ~(std::uint64_t{1} << i); }

  constexpr CoordSet with(int i) const { return CoordSet(mask_ | (std::uint64_t{1} << i)); }
  constexpr CoordSet without(int i) const { return CoordSet(mask_ & ~(std::uint64_t{1} << i)); }
  constexpr bool subset_of(CoordSet o) const { return (mask_ & ~o.mask_) == 0; }
  // Largest index + 1, or 0 when empty.
  constexpr int bound() const { return 64 - std::countl_zero(mask_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) { return CoordSet(a.mask_ | b.mask_); }
  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) { return CoordSet(a.mask_ & b.mask_); }
  friend constexpr CoordSet operator-(CoordSet a, CoordSet b) { return CoordSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(CoordSet, CoordSet) = default;

  // Orders by sorted member list, lexicographically.
  friend bool lex_less(CoordSet a, CoordSet b) {
    std::uint64_t x = a.mask_, y = b.mask_;
    while (x != 0 && y != 0) {
      const int ax = std::countr_zero(x), by = std::countr_zero(y);
      if (ax != by) return ax < by;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  std::uint64_t mask_ = 0;
};

// Visits every k-subset of `universe` in lexicographic order of sorted
// member lists. Stops early and returns false when `visit` returns false.
template <class Visit>
bool for_each_subset_of_size(CoordSet universe, int k, Visit&& visit) {
  const std::vector<int> pool = universe.members();
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << pool[i];
    if (!visit(CoordSet(mask))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace locrep
