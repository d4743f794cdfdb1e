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


// Closed-form upper bounds on the minimum distance of codes with locality.
// All evaluators are pure functions of the parameters.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locrep/error.hpp"

namespace locrep {

enum class Theorem { kGeneral, kLocalityR, kLrcRDelta, kRdc, kSquare };

inline std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kGeneral: return "general";
    case Theorem::kLocalityR: return "locality_r";
    case Theorem::kLrcRDelta: return "lrc";
    case Theorem::kRdc: return "rdc";
    case Theorem::kSquare: return "square";
  }
  return "unknown";
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::kGeneral, Theorem::kLocalityR, Theorem::kLrcRDelta, Theorem::kRdc,
                    Theorem::kSquare}) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

struct BoundParams {
  int n = 0;
  int file_size = 0;
  std::optional<int> alpha;
  std::optional<int> r;
  std::optional<int> delta;
  std::optional<int> rho;
};

struct BoundReport {
  Theorem theorem = Theorem::kGeneral;
  BoundParams params;
  int value = 0;
  // The quantity subtracted from the Singleton-like term, when the theorem
  // has one: rho (general), its lower bound (locality_r, lrc), mu (rdc) or
  // s (square).
  std::optional<int> rho;
  std::optional<int> mu;
  std::optional<int> s;
};

// ceil(a / b) for a >= 0, b > 0.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

namespace detail {

inline void require_positive(int v, const char* name) {
  if (v < 1) throw UsageError(std::string(name) + " must be positive, got " + std::to_string(v));
}

}  // namespace detail

// d <= n - ceil(M/alpha) + 1 - rho
inline int bound_general(int n, int file_size, int alpha, int rho) {
  detail::require_positive(n, "n");
  detail::require_positive(file_size, "M");
  detail::require_positive(alpha, "alpha");
  if (rho < 0) throw UsageError("rho must be nonnegative, got " + std::to_string(rho));
  return n - ceil_div(file_size, alpha) + 1 - rho;
}

// Lower bound on rho for codes where every coordinate has a regenerating
// set of size at most r+1.
inline int rho_lower_bound_locality_r(int file_size, int alpha, int r) {
  return ceil_div(file_size, r * alpha) - 1;
}

// d <= n - ceil(M/alpha) - ceil(M/(r*alpha)) + 2
inline int bound_locality_r(int n, int file_size, int alpha, int r) {
  detail::require_positive(r, "r");
  detail::require_positive(alpha, "alpha");
  detail::require_positive(file_size, "M");
  return bound_general(n, file_size, alpha, rho_lower_bound_locality_r(file_size, alpha, r));
}

// d <= n - ceil(M/alpha) + 1 - (ceil(M/(r*alpha)) - 1)(delta - 1)
inline int bound_lrc(int n, int file_size, int alpha, int r, int delta) {
  detail::require_positive(r, "r");
  detail::require_positive(alpha, "alpha");
  detail::require_positive(file_size, "M");
  if (delta < 2) throw UsageError("delta must be at least 2, got " + std::to_string(delta));
  return bound_general(n, file_size, alpha,
                       rho_lower_bound_locality_r(file_size, alpha, r) * (delta - 1));
}

// mu = ceil(((M-1)(delta-1) + 1) / ((r-1)(delta-1) + 1)) - 1
inline int rdc_mu(int file_size, int r, int delta) {
  detail::require_positive(file_size, "M");
  if (r < 2) {
    throw DomainError("r must be at least 2 for the disjoint-repair-set bound, got " +
                      std::to_string(r));
  }
  if (delta < 2) throw UsageError("delta must be at least 2, got " + std::to_string(delta));
  return ceil_div((file_size - 1) * (delta - 1) + 1, (r - 1) * (delta - 1) + 1) - 1;
}

// d <= n - M + 1 - mu, for linear scalar codes with delta-1 disjoint repair
// sets of size <= r+1 per coordinate.
inline int bound_rdc(int n, int file_size, int r, int delta) {
  return bound_general(n, file_size, 1, rdc_mu(file_size, r, delta));
}

// g(x) = xr - floor(x^2/4) on 0 <= x <= 2r+1.
inline int g_function(int x, int r) {
  if (r < 1) throw DomainError("r must be positive, got " + std::to_string(r));
  if (x < 0 || x > 2 * r + 1) {
    throw DomainError("g(x) is defined only for 0 <= x <= 2r+1; got x=" + std::to_string(x) +
                      ", r=" + std::to_string(r));
  }
  return x % 2 == 0 ? x * r - x * x / 4 : x * r - (x * x - 1) / 4;
}

// s = max{x in [0, 2r+1] : g(x) < M}, for r+1 <= M <= r^2.
inline int s_value(int file_size, int r) {
  if (r < 2) throw DomainError("square codes need r >= 2, got " + std::to_string(r));
  if (file_size < r + 1 || file_size > r * r) {
    throw DomainError("square codes need r+1 <= M <= r^2; got M=" + std::to_string(file_size) +
                      ", r=" + std::to_string(r));
  }
  int s = 0;
  for (int x = 0; x <= 2 * r + 1; ++x) {
    if (g_function(x, r) < file_size) s = x;
  }
  return s;
}

// d <= n - M + 1 - s for square codes, n = (r+1)^2.
inline int bound_square(int n, int file_size, int r) {
  if (r < 2) throw DomainError("square codes need r >= 2, got " + std::to_string(r));
  if (n != (r + 1) * (r + 1)) {
    throw DomainError("square codes have n = (r+1)^2 = " + std::to_string((r + 1) * (r + 1)) +
                      ", got n=" + std::to_string(n));
  }
  return n - file_size + 1 - s_value(file_size, r);
}

// Evaluates the bound of one theorem, checking that the parameters it
// needs are present.
inline BoundReport evaluate_bound(Theorem theorem, const BoundParams& p) {
  std::vector<std::pair<const std::optional<int>*, const char*>> required;
  switch (theorem) {
    case Theorem::kGeneral: required = {{&p.rho, "rho"}}; break;
    case Theorem::kLocalityR:
    case Theorem::kSquare: required = {{&p.r, "r"}}; break;
    case Theorem::kLrcRDelta:
    case Theorem::kRdc: required = {{&p.r, "r"}, {&p.delta, "delta"}}; break;
  }
  std::string missing;
  for (const auto& [value, name] : required) {
    if (!*value) missing += std::string(missing.empty() ? "" : ", ") + "--" + name;
  }
  if (!missing.empty()) {
    throw UsageError(std::string("theorem '") + std::string(theorem_name(theorem)) +
                     "' needs " + missing);
  }
  BoundReport report;
  report.theorem = theorem;
  report.params = p;
  const int alpha = p.alpha.value_or(1);
  switch (theorem) {
    case Theorem::kGeneral:
      report.rho = *p.rho;
      report.value = bound_general(p.n, p.file_size, alpha, *report.rho);
      break;
    case Theorem::kLocalityR:
      report.value = bound_locality_r(p.n, p.file_size, alpha, *p.r);
      report.rho = rho_lower_bound_locality_r(p.file_size, alpha, *p.r);
      break;
    case Theorem::kLrcRDelta:
      report.value = bound_lrc(p.n, p.file_size, alpha, *p.r, *p.delta);
      report.rho = rho_lower_bound_locality_r(p.file_size, alpha, *p.r) * (*p.delta - 1);
      break;
    case Theorem::kRdc:
      if (alpha != 1) throw DomainError("the disjoint-repair-set bound is for alpha = 1");
      report.mu = rdc_mu(p.file_size, *p.r, *p.delta);
      report.value = bound_rdc(p.n, p.file_size, *p.r, *p.delta);
      break;
    case Theorem::kSquare:
      if (alpha != 1) throw DomainError("the square-code bound is for alpha = 1");
      report.value = bound_square(p.n, p.file_size, *p.r);
      report.s = s_value(p.file_size, *p.r);
      break;
  }
  return report;
}

struct CompareRow {
  int file_size = 0;
  int square = 0;
  int rdc = 0;
};

// Square-code bound next to the disjoint-repair-set bound with delta = 3,
// one row per M in [r+1, r^2].
inline std::vector<CompareRow> compare_table(int r) {
  if (r < 2) throw DomainError("square codes need r >= 2, got " + std::to_string(r));
  const int n = (r + 1) * (r + 1);
  std::vector<CompareRow> rows;
  for (int m = r + 1; m <= r * r; ++m) {
    rows.push_back({m, bound_square(n, m, r), bound_rdc(n, m, r, 3)});
  }
  return rows;
}

inline std::string compare_table_csv(const std::vector<CompareRow>& rows) {
  std::string out = "M,bound_square,bound_rdc\n";
  for (const CompareRow& row : rows) {
    out += std::to_string(row.file_size) + "," + std::to_string(row.square) + "," +
           std::to_string(row.rdc) + "\n";
  }
  return out;
}

}  // namespace locrep
