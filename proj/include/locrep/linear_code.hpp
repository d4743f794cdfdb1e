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


// Linear scalar codes given by a generator matrix, the entropy-as-rank
// oracle and the brute-force minimum distance.

#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locrep/coord_set.hpp"
#include "locrep/error.hpp"
#include "locrep/gf2m.hpp"

namespace locrep {

// Anything that can report the joint entropy of a set of coordinates, in
// units of one alphabet symbol. Everything above the code layer only talks
// to codes through this interface.
template <class T>
concept EntropyOracle = requires(const T& oracle, CoordSet s) {
  { oracle.length() } -> std::convertible_to<int>;
  { oracle.file_size() } -> std::convertible_to<int>;
  { oracle.alpha() } -> std::convertible_to<int>;
  { oracle.entropy(s) } -> std::convertible_to<int>;
};

// Family information carried alongside constructed codes.
struct CodeMetadata {
  std::string family;
  int r = 0;
  int file_size = 0;
};

struct SearchLimits {
  static constexpr int kDefaultSubsetCap = 24;

  // Largest code length accepted by exhaustive subset scans.
  int subset_cap = kDefaultSubsetCap;

  // Default cap, overridden by LOCREP_SEARCH_CAP when it holds a positive
  // integer.
  static SearchLimits from_env() {
    SearchLimits limits;
    if (const char* raw = std::getenv("LOCREP_SEARCH_CAP")) {
      char* end = nullptr;
      const long v = std::strtol(raw, &end, 10);
      if (end != raw && *end == '\0' && v > 0 && v <= CoordSet::kMaxCoords) {
        limits.subset_cap = static_cast<int>(v);
      } else {
        throw UsageError(std::string("LOCREP_SEARCH_CAP must be an integer in [1, 64], got '") +
                         raw + "'");
      }
    }
    return limits;
  }
};

// Generator matrix over GF(2^m): n columns of length M, full rank M.
class LinearCode {
 public:
  LinearCode(FieldSpec field, int file_size, std::vector<Column> columns,
             std::optional<CodeMetadata> metadata = std::nullopt)
      : field_(field), file_size_(file_size), columns_(std::move(columns)),
        metadata_(std::move(metadata)) {
    const int n = length();
    if (n < 1 || n > CoordSet::kMaxCoords) {
      throw UsageError("code length must be in [1, 64], got " + std::to_string(n));
    }
    if (file_size_ < 1 || file_size_ > n) {
      throw UsageError("file size M must satisfy 1 <= M <= n, got M=" +
                       std::to_string(file_size_) + ", n=" + std::to_string(n));
    }
    for (const Column& c : columns_) {
      if (static_cast<int>(c.size()) != file_size_) {
        throw UsageError("generator column of length " + std::to_string(c.size()) +
                         ", expected M=" + std::to_string(file_size_));
      }
      for (FieldElement e : c) {
        if (!field_.contains(e)) throw UsageError("generator entry outside the field");
      }
    }
    if (matrix_rank(field_, file_size_, columns_) != file_size_) {
      throw DomainError("generator matrix is not of full rank M=" + std::to_string(file_size_));
    }
  }

  const FieldSpec& field() const { return field_; }
  int length() const { return static_cast<int>(columns_.size()); }
  int file_size() const { return file_size_; }
  // Concrete codes are scalar.
  int alpha() const { return 1; }
  std::span<const Column> columns() const { return columns_; }
  const Column& column(int i) const { return columns_.at(i); }
  const std::optional<CodeMetadata>& metadata() const { return metadata_; }
  CoordSet coords() const { return CoordSet::full(length()); }

  // Rank of the columns indexed by `subset`.
  int entropy(CoordSet subset) const {
    if (!subset.subset_of(coords())) {
      throw UsageError("coordinate set exceeds code length " + std::to_string(length()));
    }
    const int rows = file_size_;
    // Echelon basis stored flat; basis vectors are normalized at their pivot.
    std::vector<FieldElement> basis;
    std::vector<int> pivot;
    basis.reserve(static_cast<std::size_t>(rows) * rows);
    std::vector<FieldElement> v(rows);
    for (std::uint64_t m = subset.mask(); m != 0; m &= m - 1) {
      const Column& c = columns_[std::countr_zero(m)];
      std::copy(c.begin(), c.end(), v.begin());
      for (std::size_t b = 0; b < pivot.size(); ++b) {
        const FieldElement coef = v[pivot[b]];
        if (coef.is_zero()) continue;
        const FieldElement* row = &basis[b * rows];
        for (int k = 0; k < rows; ++k) v[k] = field_.sub(v[k], field_.mul(coef, row[k]));
      }
      int p = 0;
      while (p < rows && v[p].is_zero()) ++p;
      if (p == rows) continue;
      const FieldElement scale = field_.inv(v[p]);
      for (int k = 0; k < rows; ++k) basis.push_back(field_.mul(v[k], scale));
      pivot.push_back(p);
      if (static_cast<int>(pivot.size()) == rows) break;
    }
    return static_cast<int>(pivot.size());
  }

  // Codeword for a message of M symbols: Y_i = sum_k message[k] * G[k][i].
  std::vector<FieldElement> encode(std::span<const FieldElement> message) const {
    if (static_cast<int>(message.size()) != file_size_) {
      throw UsageError("message must have M=" + std::to_string(file_size_) + " symbols");
    }
    std::vector<FieldElement> out(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      FieldElement acc{};
      for (int k = 0; k < file_size_; ++k) {
        acc = field_.add(acc, field_.mul(message[k], columns_[i][k]));
      }
      out[i] = acc;
    }
    return out;
  }

 private:
  FieldSpec field_;
  int file_size_;
  std::vector<Column> columns_;
  std::optional<CodeMetadata> metadata_;
};

static_assert(EntropyOracle<LinearCode>);

struct DistanceResult {
  int distance = 0;
  // A largest coordinate set with entropy below M (lexicographically first
  // of its size).
  CoordSet deficient;
};

// Exact minimum distance d = n - max{|E| : H(Y_E) < M}, by scanning subset
// sizes from n-1 downward.
template <EntropyOracle Code>
DistanceResult min_distance_witness(const Code& code, SearchLimits limits = {}) {
  const int n = code.length();
  if (n > limits.subset_cap) {
    throw TooLargeError("instance too large: n=" + std::to_string(n) +
                        " exceeds the subset search cap " + std::to_string(limits.subset_cap));
  }
  const int target = code.file_size();
  const CoordSet all = CoordSet::full(n);
  for (int k = n - 1; k >= 0; --k) {
    std::optional<CoordSet> found;
    for_each_subset_of_size(all, k, [&](CoordSet s) {
      if (code.entropy(s) < target) {
        found = s;
        return false;
      }
      return true;
    });
    if (found) return {n - k, *found};
  }
  // Only reachable if the empty set had full entropy.
  throw DomainError("file size must be positive");
}

template <EntropyOracle Code>
int min_distance(const Code& code, SearchLimits limits = {}) {
  return min_distance_witness(code, limits).distance;
}

// True iff the surviving coordinates [n] - failed still carry the file.
template <EntropyOracle Code>
bool erasure_decodable(const Code& code, CoordSet failed) {
  const CoordSet all = CoordSet::full(code.length());
  if (!failed.subset_of(all)) throw UsageError("erasure pattern exceeds code length");
  return code.entropy(all - failed) == code.file_size();
}

}  // namespace locrep
