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


// JSON and hex encodings for codes, Phi profiles, repair plans and bound
// reports. Coordinates are written 1-based; symbols are hex strings of
// the coefficient bit-vector (bit k is the coefficient of z^k).

#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locrep/bounds.hpp"
#include "locrep/error.hpp"
#include "locrep/gf2m.hpp"
#include "locrep/linear_code.hpp"
#include "locrep/regset.hpp"
#include "locrep/repair.hpp"

namespace locrep::io {

using json = nlohmann::json;

inline std::string to_hex(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), kDigits[v & 0xf]);
    v >>= 4;
  }
  return out;
}

inline std::uint64_t from_hex(const std::string& s) {
  if (s.empty() || s.size() > 16) throw UsageError("invalid hex string '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    const int d = std::isdigit(static_cast<unsigned char>(c))          ? c - '0'
                  : (c >= 'a' && c <= 'f')                               ? c - 'a' + 10
                  : (c >= 'A' && c <= 'F')                               ? c - 'A' + 10
                                                                         : -1;
    if (d < 0) throw UsageError("invalid hex string '" + s + "'");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

inline std::string symbol_to_hex(FieldElement e) { return to_hex(e.bits); }

inline FieldElement symbol_from_hex(const FieldSpec& field, const std::string& s) {
  const FieldElement e{from_hex(s)};
  if (!field.contains(e)) {
    throw UsageError("symbol '" + s + "' does not fit GF(2^" + std::to_string(field.degree()) + ")");
  }
  return e;
}

inline json members_json(CoordSet s) {
  json out = json::array();
  for (int c : s.members()) out.push_back(c + 1);
  return out;
}

inline json code_to_json(const LinearCode& code) {
  json j;
  j["q"] = 2;
  j["m"] = code.field().degree();
  j["modulus_hex"] = to_hex(code.field().modulus());
  j["n"] = code.length();
  j["M"] = code.file_size();
  json cols = json::array();
  for (const Column& c : code.columns()) {
    json col = json::array();
    for (FieldElement e : c) col.push_back(symbol_to_hex(e));
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  if (const auto& meta = code.metadata()) {
    j["metadata"] = {{"family", meta->family}, {"r", meta->r}, {"M", meta->file_size}};
  }
  return j;
}

namespace detail {

inline const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("code file is missing field '") + key + "'");
  }
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field_of(j, key);
  if (!v.is_number_integer()) throw UsageError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

inline LinearCode code_from_json(const json& j) {
  if (detail::int_field(j, "q") != 2) throw UsageError("only q = 2 is supported");
  const int m = detail::int_field(j, "m");
  const json& mod = detail::field_of(j, "modulus_hex");
  if (!mod.is_string()) throw UsageError("field 'modulus_hex' must be a string");
  const FieldSpec field(m, from_hex(mod.get<std::string>()));
  const int n = detail::int_field(j, "n");
  const int file_size = detail::int_field(j, "M");
  const json& cols = detail::field_of(j, "columns");
  if (!cols.is_array() || static_cast<int>(cols.size()) != n) {
    throw UsageError("'columns' must be an array of n = " + std::to_string(n) + " columns");
  }
  std::vector<Column> columns;
  for (const json& col : cols) {
    if (!col.is_array() || static_cast<int>(col.size()) != file_size) {
      throw UsageError("each column must be an array of M = " + std::to_string(file_size) +
                       " hex strings");
    }
    Column c;
    for (const json& e : col) {
      if (!e.is_string()) throw UsageError("column entries must be hex strings");
      c.push_back(symbol_from_hex(field, e.get<std::string>()));
    }
    columns.push_back(std::move(c));
  }
  std::optional<CodeMetadata> meta;
  if (j.contains("metadata")) {
    const json& mj = j.at("metadata");
    const json& fam = detail::field_of(mj, "family");
    if (!fam.is_string()) throw UsageError("metadata 'family' must be a string");
    meta = CodeMetadata{fam.get<std::string>(), detail::int_field(mj, "r"),
                        detail::int_field(mj, "M")};
    if (meta->file_size != file_size) throw UsageError("metadata M disagrees with code M");
  }
  return LinearCode(field, file_size, std::move(columns), std::move(meta));
}

inline json regset_json(const RegeneratingSet& s) {
  return {{"target", s.target + 1}, {"members", members_json(s.members)}};
}

inline json profile_to_json(const PhiProfile& p) {
  json witnesses = json::array();
  for (const RegSetSequence& seq : p.witnesses) {
    json items = json::array();
    for (const RegeneratingSet& s : seq) items.push_back(regset_json(s));
    witnesses.push_back(std::move(items));
  }
  return {{"phi", p.phi}, {"rho", p.rho}, {"witnesses", std::move(witnesses)},
          {"size_cap", p.size_cap}};
}

inline json plan_to_json(const RepairPlan& plan) {
  json steps = json::array();
  for (const RepairStep& step : plan.steps) {
    json coeffs = json::array();
    for (FieldElement e : step.coefficients) coeffs.push_back(symbol_to_hex(e));
    steps.push_back({{"target", step.target + 1},
                     {"members", members_json(step.members)},
                     {"coefficients", std::move(coeffs)}});
  }
  return {{"n", plan.length}, {"failed", members_json(plan.failed)}, {"steps", std::move(steps)}};
}

inline json bound_to_json(const BoundReport& report) {
  json params = {{"n", report.params.n}, {"M", report.params.file_size}};
  if (report.params.alpha) params["alpha"] = *report.params.alpha;
  if (report.params.r) params["r"] = *report.params.r;
  if (report.params.delta) params["delta"] = *report.params.delta;
  if (report.params.rho) params["rho"] = *report.params.rho;
  json j = {{"theorem", std::string(theorem_name(report.theorem))},
            {"params", std::move(params)},
            {"value", report.value}};
  if (report.rho) j["rho"] = *report.rho;
  if (report.mu) j["mu"] = *report.mu;
  if (report.s) j["s"] = *report.s;
  return j;
}

}  // namespace locrep::io
