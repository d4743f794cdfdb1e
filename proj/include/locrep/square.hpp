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


// The square code: (r+1)^2 coordinates on a grid whose rows and columns
// each sum to zero, built from Frobenius powers of GF(2)-independent
// field elements so that its minimum distance meets n - M + 1 - s.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locrep/bounds.hpp"
#include "locrep/error.hpp"
#include "locrep/gf2m.hpp"
#include "locrep/linear_code.hpp"
#include "locrep/regset.hpp"

namespace locrep {

// Grid position, 0-based. Coordinate index is row * (r+1) + col.
struct GridIndex {
  int row = 0;
  int col = 0;

  int coordinate(int r) const { return row * (r + 1) + col; }
  static GridIndex from_coordinate(int coord, int r) { return {coord / (r + 1), coord % (r + 1)}; }
  friend bool operator==(GridIndex, GridIndex) = default;
};

struct SquareCode {
  int r = 0;
  int file_size = 0;
  // betas[row][col], (r+1) x (r+1).
  std::vector<std::vector<FieldElement>> betas;
  LinearCode code;
};

inline CoordSet grid_row(int r, int row) {
  CoordSet s;
  for (int c = 0; c <= r; ++c) s.insert(GridIndex{row, c}.coordinate(r));
  return s;
}

inline CoordSet grid_col(int r, int col) {
  CoordSet s;
  for (int row = 0; row <= r; ++row) s.insert(GridIndex{row, col}.coordinate(r));
  return s;
}

// Generator column (b, b^2, b^4, ..., b^(2^(M-1))).
inline Column frobenius_column(const FieldSpec& field, FieldElement beta, int file_size) {
  Column col(file_size);
  for (int k = 0; k < file_size; ++k) {
    col[k] = beta;
    beta = field.square(beta);
  }
  return col;
}

// Inner betas are the monomials z^(row*r + col); the last row and column
// are chosen so every row and column of betas sums to zero. The field
// defaults to GF(2^(r^2)) with the default modulus.
inline SquareCode build_square_code(int r, int file_size,
                                   std::optional<FieldSpec> field = std::nullopt) {
  if (r < 2) throw DomainError("square codes need r >= 2, got " + std::to_string(r));
  if (file_size < r + 1 || file_size > r * r) {
    throw DomainError("square codes need r+1 <= M <= r^2; got M=" + std::to_string(file_size) +
                      ", r=" + std::to_string(r));
  }
  if (!field) field.emplace(r * r);
  if (field->degree() < r * r) {
    throw DomainError("square codes need field degree m >= r^2 = " + std::to_string(r * r) +
                      ", got m=" + std::to_string(field->degree()));
  }
  if ((r + 1) * (r + 1) > CoordSet::kMaxCoords) {
    throw DomainError("square code length exceeds 64 coordinates");
  }
  const FieldSpec& f = *field;
  std::vector<std::vector<FieldElement>> betas(r + 1, std::vector<FieldElement>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) betas[i][j] = f.monomial(i * r + j);
  }
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) betas[r][j] = f.sub(betas[r][j], betas[i][j]);
  }
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < r; ++j) betas[i][r] = f.sub(betas[i][r], betas[i][j]);
  }
  std::vector<Column> columns;
  columns.reserve((r + 1) * (r + 1));
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) columns.push_back(frobenius_column(f, betas[i][j], file_size));
  }
  LinearCode code(f, file_size, std::move(columns), CodeMetadata{"square", r, file_size});
  return SquareCode{r, file_size, std::move(betas), std::move(code)};
}

// Every grid row and every grid column of generator columns sums to zero.
inline bool verify_grid_relations(const LinearCode& code, int r) {
  if (code.length() != (r + 1) * (r + 1)) return false;
  const FieldSpec& f = code.field();
  auto sums_to_zero = [&](CoordSet line) {
    Column acc(code.file_size());
    for (int c : line.members()) {
      for (int k = 0; k < code.file_size(); ++k) acc[k] = f.add(acc[k], code.column(c)[k]);
    }
    for (FieldElement e : acc) {
      if (!e.is_zero()) return false;
    }
    return true;
  };
  for (int line = 0; line <= r; ++line) {
    if (!sums_to_zero(grid_row(r, line)) || !sums_to_zero(grid_col(r, line))) return false;
  }
  return true;
}

inline bool verify_grid_relations(const SquareCode& sc) {
  return verify_grid_relations(sc.code, sc.r);
}

// The row set and the column set through idx.
inline std::pair<RegeneratingSet, RegeneratingSet> grid_regsets(const SquareCode& sc,
                                                               GridIndex idx) {
  if (idx.row < 0 || idx.row > sc.r || idx.col < 0 || idx.col > sc.r) {
    throw UsageError("grid index out of range");
  }
  const int target = idx.coordinate(sc.r);
  return {RegeneratingSet{target, grid_row(sc.r, idx.row)},
          RegeneratingSet{target, grid_col(sc.r, idx.col)}};
}

// Any r of the r+1 row spaces of betas span an r^2-dimensional space over
// GF(2), i.e. they sum directly.
inline bool row_spaces_direct_sum(const SquareCode& sc) {
  for (int omit = 0; omit <= sc.r; ++omit) {
    std::vector<FieldElement> elems;
    for (int i = 0; i <= sc.r; ++i) {
      if (i == omit) continue;
      elems.insert(elems.end(), sc.betas[i].begin(), sc.betas[i].end());
    }
    if (gf2_rank(elems) != sc.r * sc.r) return false;
  }
  return true;
}

enum class RankLemmaOutcome { kHolds, kViolated, kHypothesesUnmet };

// True when |X| >= M, X meets every row in at most r points and misses at
// least one row entirely.
inline bool rank_lemma_hypotheses(const SquareCode& sc, CoordSet x) {
  if (x.size() < sc.file_size) return false;
  bool some_row_empty = false;
  for (int row = 0; row <= sc.r; ++row) {
    const int hits = (x & grid_row(sc.r, row)).size();
    if (hits > sc.r) return false;
    if (hits == 0) some_row_empty = true;
  }
  return some_row_empty;
}

// For admissible X the selected generator columns have rank M.
inline RankLemmaOutcome check_rank_lemma(const SquareCode& sc, CoordSet x) {
  if (!x.subset_of(sc.code.coords())) throw UsageError("coordinate set exceeds code length");
  if (!rank_lemma_hypotheses(sc, x)) return RankLemmaOutcome::kHypothesesUnmet;
  return sc.code.entropy(x) == sc.file_size ? RankLemmaOutcome::kHolds
                                            : RankLemmaOutcome::kViolated;
}

// Brute-force distance equals n - M + 1 - s exactly.
inline bool verify_optimal_distance(const LinearCode& code, int r, SearchLimits limits = {}) {
  const int bound = bound_square(code.length(), code.file_size(), r);
  return min_distance(code, limits) == bound;
}

inline bool verify_optimal_distance(const SquareCode& sc, SearchLimits limits = {}) {
  return verify_optimal_distance(sc.code, sc.r, limits);
}

}  // namespace locrep
