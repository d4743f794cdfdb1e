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


// Erasure repair through regenerating sets.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "locrep/coord_set.hpp"
#include "locrep/error.hpp"
#include "locrep/gf2m.hpp"
#include "locrep/linear_code.hpp"
#include "locrep/regset.hpp"

namespace locrep {

struct RepairStep {
  int target = 0;
  // Regenerating set used, including the target.
  CoordSet members;
  // One coefficient per member other than the target, in ascending
  // coordinate order: Y_target = sum coeff_j * Y_j.
  std::vector<FieldElement> coefficients;
};

struct RepairPlan {
  int length = 0;
  CoordSet failed;
  std::vector<RepairStep> steps;
};

// Thrown when some failed coordinate has no usable regenerating set.
class RepairError : public DomainError {
 public:
  RepairError(int stuck, CoordSet residual)
      : DomainError(message(stuck, residual)), stuck_(stuck), residual_(residual) {}

  int stuck() const { return stuck_; }
  CoordSet residual() const { return residual_; }

 private:
  static std::string message(int stuck, CoordSet residual) {
    std::string s = "coordinate " + std::to_string(stuck + 1) +
                    " cannot be repaired within the locality cap; residual failures {";
    bool first = true;
    for (int c : residual.members()) {
      s += (first ? "" : ",") + std::to_string(c + 1);
      first = false;
    }
    return s + "} (1-based)";
  }

  int stuck_;
  CoordSet residual_;
};

// Coefficients c with column(target) = sum_j c_j column(j) over the members
// other than target. Free variables are set to zero. nullopt if the target
// is not in the span.
inline std::optional<std::vector<FieldElement>> solve_repair_coefficients(const LinearCode& code,
                                                                          int target,
                                                                          CoordSet members) {
  const FieldSpec& f = code.field();
  const std::vector<int> helpers = members.without(target).members();
  const int rows = code.file_size();
  const int cols = static_cast<int>(helpers.size());
  // Augmented matrix [A | b], row-major.
  std::vector<std::vector<FieldElement>> a(rows, std::vector<FieldElement>(cols + 1));
  for (int k = 0; k < rows; ++k) {
    for (int j = 0; j < cols; ++j) a[k][j] = code.column(helpers[j])[k];
    a[k][cols] = code.column(target)[k];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const FieldElement scale = f.inv(a[row][c]);
    for (FieldElement& e : a[row]) e = f.mul(e, scale);
    for (int k = 0; k < rows; ++k) {
      if (k == row || a[k][c].is_zero()) continue;
      const FieldElement factor = a[k][c];
      for (int j = c; j <= cols; ++j) a[k][j] = f.sub(a[k][j], f.mul(factor, a[row][j]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int k = row; k < rows; ++k) {
    if (!a[k][cols].is_zero()) return std::nullopt;
  }
  std::vector<FieldElement> coeffs(cols);
  for (int k = 0; k < row; ++k) coeffs[pivot_col[k]] = a[k][cols];
  return coeffs;
}

// Checks both plan invariants against the code: each step's set meets the
// still-failed coordinates only in its target, and the coefficients
// reproduce the target column.
inline bool validate_plan(const LinearCode& code, const RepairPlan& plan) {
  const FieldSpec& f = code.field();
  CoordSet pending = plan.failed;
  for (const RepairStep& step : plan.steps) {
    if (!pending.contains(step.target)) return false;
    if ((step.members & pending) != CoordSet{}.with(step.target)) return false;
    const std::vector<int> helpers = step.members.without(step.target).members();
    if (helpers.size() != step.coefficients.size()) return false;
    for (int k = 0; k < code.file_size(); ++k) {
      FieldElement acc{};
      for (std::size_t j = 0; j < helpers.size(); ++j) {
        acc = f.add(acc, f.mul(step.coefficients[j], code.column(helpers[j])[k]));
      }
      if (acc != code.column(step.target)[k]) return false;
    }
    pending.erase(step.target);
  }
  return pending.empty();
}

// Greedy sequential plan. At each step the lowest failed coordinate that
// has a regenerating set of size <= locality_cap + 1 avoiding the other
// outstanding failures is repaired; repaired coordinates become available
// to later steps.
inline RepairPlan plan_repair(const LinearCode& code, CoordSet failed, int locality_cap) {
  if (locality_cap < 1) throw UsageError("locality cap must be at least 1");
  if (!failed.subset_of(code.coords())) throw UsageError("erasure pattern exceeds code length");
  RepairPlan plan{code.length(), failed, {}};
  std::vector<std::optional<std::vector<RegeneratingSet>>> cache(code.length());
  CoordSet pending = failed;
  while (!pending.empty()) {
    bool progressed = false;
    for (int t : pending.members()) {
      if (!cache[t]) cache[t] = minimal_regsets(code, t, locality_cap + 1);
      for (const RegeneratingSet& s : *cache[t]) {
        if ((s.members & pending) != CoordSet{}.with(t)) continue;
        auto coeffs = solve_repair_coefficients(code, t, s.members);
        if (!coeffs) continue;
        plan.steps.push_back({t, s.members, std::move(*coeffs)});
        pending.erase(t);
        progressed = true;
        break;
      }
      if (progressed) break;
    }
    if (!progressed) throw RepairError(pending.members().front(), pending);
  }
  if (!validate_plan(code, plan)) throw std::logic_error("repair plan failed self-validation");
  return plan;
}

// Applies the plan to a codeword whose erased symbols are nullopt. The
// erased positions must be exactly the plan's failed set.
inline std::vector<FieldElement> execute_repair(const FieldSpec& field,
                                                const std::vector<std::optional<FieldElement>>& word,
                                                const RepairPlan& plan) {
  if (static_cast<int>(word.size()) != plan.length) {
    throw UsageError("codeword length " + std::to_string(word.size()) +
                     " does not match plan length " + std::to_string(plan.length));
  }
  CoordSet erased;
  for (int i = 0; i < plan.length; ++i) {
    if (!word[i]) erased.insert(i);
  }
  if (erased != plan.failed) throw UsageError("erased positions do not match the repair plan");
  std::vector<std::optional<FieldElement>> work = word;
  for (const RepairStep& step : plan.steps) {
    const std::vector<int> helpers = step.members.without(step.target).members();
    if (helpers.size() != step.coefficients.size()) {
      throw UsageError("repair step has mismatched coefficient count");
    }
    FieldElement acc{};
    for (std::size_t j = 0; j < helpers.size(); ++j) {
      if (!work[helpers[j]]) throw UsageError("repair step reads an erased symbol");
      acc = field.add(acc, field.mul(step.coefficients[j], *work[helpers[j]]));
    }
    work[step.target] = acc;
  }
  std::vector<FieldElement> out(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!work[i]) throw UsageError("plan left coordinate " + std::to_string(i) + " erased");
    out[i] = *work[i];
  }
  return out;
}

// Largest t such that locality `locality_cap` with repair tolerance t
// holds under the strict simultaneous-failure definition; 0 when even
// single failures cannot be repaired locally.
template <EntropyOracle Code>
int repair_tolerance(const Code& code, int locality_cap, LocalityLimits limits = {}) {
  int tolerance = 0;
  for (int delta = 2;; ++delta) {
    if (delta - 1 > code.length()) return tolerance;
    if (delta > limits.max_delta) {
      throw TooLargeError("repair tolerance exceeds the exhaustive check limit of " +
                          std::to_string(limits.max_delta - 1) + " erasures");
    }
    if (!verify_locality(code, locality_cap, delta, limits)) return tolerance;
    tolerance = delta - 1;
  }
}

}  // namespace locrep
