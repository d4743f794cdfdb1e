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


// Regenerating sets, nontrivial unions, the union-size profile Phi and rho,
// and the locality-with-repair-tolerance checker.

#pragma once

#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "locrep/coord_set.hpp"
#include "locrep/error.hpp"
#include "locrep/linear_code.hpp"

namespace locrep {

// A coordinate together with a set containing it whose other members
// determine it.
struct RegeneratingSet {
  int target = 0;
  CoordSet members;

  friend bool operator==(const RegeneratingSet&, const RegeneratingSet&) = default;
};

using RegSetSequence = std::vector<RegeneratingSet>;

struct PhiProfile {
  // phi[x] for x = 0..phi.size()-1.
  std::vector<int> phi;
  int rho = 0;
  // One lexicographically smallest minimizing sequence per x.
  std::vector<RegSetSequence> witnesses;
  int size_cap = 0;
};

namespace detail {

template <EntropyOracle Code>
void check_coordinate(const Code& code, int i) {
  if (i < 0 || i >= code.length()) {
    throw UsageError("coordinate " + std::to_string(i) + " out of range for length " +
                     std::to_string(code.length()));
  }
}

template <EntropyOracle Code>
void check_search_size(const Code& code, const SearchLimits& limits) {
  if (code.length() > limits.subset_cap) {
    throw TooLargeError("instance too large: n=" + std::to_string(code.length()) +
                        " exceeds the subset search cap " + std::to_string(limits.subset_cap));
  }
}

// Unchecked form of is_regenerating.
template <EntropyOracle Code>
bool regenerates(const Code& code, int i, CoordSet members) {
  return code.entropy(members) == code.entropy(members.without(i));
}

}  // namespace detail

// H(Y_i | Y_{R - i}) = 0, i.e. removing i from R does not lower the rank.
template <EntropyOracle Code>
bool is_regenerating(const Code& code, int i, CoordSet members) {
  detail::check_coordinate(code, i);
  if (!members.contains(i)) {
    throw UsageError("target " + std::to_string(i) + " is not a member of the set");
  }
  if (!members.subset_of(CoordSet::full(code.length()))) {
    throw UsageError("regenerating set exceeds code length");
  }
  return detail::regenerates(code, i, members);
}

// Size cap for minimal regenerating sets: r+1 when the code declares
// locality r, otherwise n.
template <EntropyOracle Code>
int default_size_cap(const Code& code) {
  if constexpr (requires { code.metadata(); }) {
    if (code.metadata() && code.metadata()->r > 0) return code.metadata()->r + 1;
  }
  return code.length();
}

// All inclusion-minimal regenerating sets of i with at most size_cap
// members, ordered by size and then lexicographically.
//
// Regenerating sets are closed under supersets, so a candidate is minimal
// exactly when it contains no smaller set already found.
template <EntropyOracle Code>
std::vector<RegeneratingSet> minimal_regsets(const Code& code, int i, int size_cap) {
  detail::check_coordinate(code, i);
  const CoordSet others = CoordSet::full(code.length()).without(i);
  std::vector<RegeneratingSet> found;
  const int max_extra = std::min(size_cap, code.length()) - 1;
  for (int k = 0; k <= max_extra; ++k) {
    for_each_subset_of_size(others, k, [&](CoordSet rest) {
      const CoordSet candidate = rest.with(i);
      for (const RegeneratingSet& f : found) {
        if (f.members.subset_of(candidate)) return true;
      }
      if (detail::regenerates(code, i, candidate)) found.push_back({i, candidate});
      return true;
    });
  }
  return found;
}

// Each target lies outside the union of all earlier sets. Every item must be
// a valid regenerating set.
template <EntropyOracle Code>
bool is_nontrivial_union(const Code& code, const RegSetSequence& seq) {
  CoordSet seen;
  bool ok = true;
  for (const RegeneratingSet& item : seq) {
    if (!is_regenerating(code, item.target, item.members)) {
      throw UsageError("set for target " + std::to_string(item.target) +
                       " is not a regenerating set");
    }
    if (seen.contains(item.target)) ok = false;
    seen = seen | item.members;
  }
  return ok;
}

inline CoordSet union_of(const RegSetSequence& seq) {
  CoordSet u;
  for (const RegeneratingSet& item : seq) u = u | item.members;
  return u;
}

// H(Y_U) <= alpha * (|U| - m) for the union U of a nontrivial union of m
// regenerating sets. Always true for a correct oracle.
template <EntropyOracle Code>
bool check_union_entropy(const Code& code, const RegSetSequence& seq) {
  if (!is_nontrivial_union(code, seq)) {
    throw UsageError("sequence does not have a nontrivial union");
  }
  const CoordSet u = union_of(seq);
  return code.entropy(u) <= code.alpha() * (u.size() - static_cast<int>(seq.size()));
}

// Minimal regenerating sets of every coordinate, computed once per query.
struct RegSetIndex {
  int size_cap = 0;
  std::vector<std::vector<RegeneratingSet>> by_target;

  template <EntropyOracle Code>
  static RegSetIndex build(const Code& code, int size_cap) {
    RegSetIndex index;
    index.size_cap = size_cap;
    index.by_target.reserve(code.length());
    for (int i = 0; i < code.length(); ++i) {
      index.by_target.push_back(minimal_regsets(code, i, size_cap));
    }
    return index;
  }
};

struct PhiResult {
  int value = 0;
  RegSetSequence witness;
};

namespace detail {

// Depth-first branch and bound over ordered selections of minimal sets.
// The reachable continuations depend only on the current union, so each
// (depth, union) state is expanded at most once. Expansion follows target
// order and then set order, and the incumbent is only replaced on strict
// improvement, which makes the reported witness the lexicographically
// smallest minimizer.
class PhiSearch {
 public:
  PhiSearch(const RegSetIndex& index, int x) : index_(index), x_(x), seen_(x + 1) {}

  std::optional<PhiResult> run() {
    dfs(CoordSet{}, 0);
    if (best_ == INT_MAX) return std::nullopt;
    return PhiResult{best_, best_seq_};
  }

 private:
  void dfs(CoordSet u, int depth) {
    if (depth == x_) {
      if (u.size() < best_) {
        best_ = u.size();
        best_seq_ = current_;
      }
      return;
    }
    // Every further set adds at least its own target.
    if (u.size() + (x_ - depth) >= best_) return;
    if (!seen_[depth].insert(u.mask()).second) return;
    const int n = static_cast<int>(index_.by_target.size());
    for (int t = 0; t < n; ++t) {
      if (u.contains(t)) continue;
      for (const RegeneratingSet& r : index_.by_target[t]) {
        current_.push_back(r);
        dfs(u | r.members, depth + 1);
        current_.pop_back();
      }
    }
  }

  const RegSetIndex& index_;
  int x_;
  int best_ = INT_MAX;
  RegSetSequence current_;
  RegSetSequence best_seq_;
  std::vector<std::unordered_set<std::uint64_t>> seen_;
};

}  // namespace detail

// Phi(x) over the sets in `index`; nullopt when no nontrivial union of x
// sets exists.
inline std::optional<PhiResult> phi_search(const RegSetIndex& index, int x) {
  if (x < 0) throw UsageError("phi argument must be nonnegative");
  if (x == 0) return PhiResult{0, {}};
  return detail::PhiSearch(index, x).run();
}

template <EntropyOracle Code>
std::optional<int> phi(const Code& code, int x, int size_cap, SearchLimits limits = {}) {
  detail::check_search_size(code, limits);
  if (x < 0) throw UsageError("phi argument must be nonnegative");
  if (x == 0) return 0;
  const auto result = phi_search(RegSetIndex::build(code, size_cap), x);
  if (!result) return std::nullopt;
  return result->value;
}

// Phi(0..x_max); stops early at the first x for which Phi is undefined.
// rho is filled from the computed prefix only.
template <EntropyOracle Code>
PhiProfile phi_profile(const Code& code, int x_max, int size_cap, SearchLimits limits = {}) {
  detail::check_search_size(code, limits);
  if (x_max < 0) throw UsageError("x_max must be nonnegative");
  const RegSetIndex index = RegSetIndex::build(code, size_cap);
  PhiProfile profile;
  profile.size_cap = size_cap;
  bool rho_open = true;
  for (int x = 0; x <= x_max; ++x) {
    const auto result = phi_search(index, x);
    if (!result) break;
    profile.phi.push_back(result->value);
    profile.witnesses.push_back(result->witness);
    if (rho_open && code.alpha() * (result->value - x) < code.file_size()) {
      profile.rho = x;
    } else {
      rho_open = false;
    }
  }
  return profile;
}

// rho = max{x : Phi(x) - x < M/alpha}. Phi is extended until the condition
// fails or no further nontrivial union exists. Every witness union for
// x <= rho must leave some coordinate uncovered; a violation means the
// oracle is inconsistent and raises std::logic_error.
template <EntropyOracle Code>
PhiProfile rho_profile(const Code& code, int size_cap, SearchLimits limits = {}) {
  detail::check_search_size(code, limits);
  const RegSetIndex index = RegSetIndex::build(code, size_cap);
  const CoordSet all = CoordSet::full(code.length());
  PhiProfile profile;
  profile.size_cap = size_cap;
  for (int x = 0;; ++x) {
    const auto result = phi_search(index, x);
    if (!result) break;
    profile.phi.push_back(result->value);
    profile.witnesses.push_back(result->witness);
    if (code.alpha() * (result->value - x) >= code.file_size()) break;
    if (union_of(result->witness) == all) {
      throw std::logic_error("witness union for x=" + std::to_string(x) +
                             " covers every coordinate although x <= rho");
    }
    profile.rho = x;
  }
  return profile;
}

template <EntropyOracle Code>
int rho(const Code& code, SearchLimits limits = {}) {
  return rho_profile(code, default_size_cap(code), limits).rho;
}

struct LocalityLimits {
  int max_delta = 4;
  int max_length = 25;
};

struct LocalityViolation {
  int coordinate = 0;
  // Erasures other than the coordinate itself.
  CoordSet other_erasures;
};

// First (coordinate, erasure set) for which locality r with repair tolerance
// delta-1 fails, or nullopt if every coordinate passes.
template <EntropyOracle Code>
std::optional<LocalityViolation> find_locality_violation(const Code& code, int r, int delta,
                                                         LocalityLimits limits = {}) {
  if (delta < 2) throw UsageError("delta must be at least 2");
  if (r < 1) throw UsageError("locality r must be at least 1");
  if (delta > limits.max_delta || code.length() > limits.max_length) {
    throw TooLargeError("instance too large for exhaustive erasure enumeration: delta=" +
                        std::to_string(delta) + ", n=" + std::to_string(code.length()) +
                        " (limits delta<=" + std::to_string(limits.max_delta) +
                        ", n<=" + std::to_string(limits.max_length) + ")");
  }
  const int n = code.length();
  for (int i = 0; i < n; ++i) {
    const std::vector<RegeneratingSet> sets = minimal_regsets(code, i, r + 1);
    const CoordSet others = CoordSet::full(n).without(i);
    std::optional<LocalityViolation> bad;
    for (int k = 0; k <= delta - 2 && !bad; ++k) {
      for_each_subset_of_size(others, k, [&](CoordSet erased) {
        for (const RegeneratingSet& s : sets) {
          if ((s.members & erased).empty()) return true;
        }
        bad = LocalityViolation{i, erased};
        return false;
      });
    }
    if (bad) return bad;
  }
  return std::nullopt;
}

// Every coordinate has locality r with repair tolerance delta-1: for every
// erasure set E containing it with |E| <= delta-1 there is a regenerating
// set of size <= r+1 meeting E only in the coordinate.
template <EntropyOracle Code>
bool verify_locality(const Code& code, int r, int delta, LocalityLimits limits = {}) {
  return !find_locality_violation(code, r, delta, limits).has_value();
}

}  // namespace locrep
