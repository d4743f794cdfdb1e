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


// Command-line front end. Kept in a header so the test suite can drive it
// in-process.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locrep/locrep.hpp"

namespace locrep::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

namespace detail {

inline LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open code file '" + path + "'");
  io::json j;
  try {
    in >> j;
  } catch (const io::json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
  return io::code_from_json(j);
}

inline void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write output file '" + out_path + "'");
  f << payload;
}

inline void emit_json(const io::json& j, const std::string& out_path, std::ostream& out) {
  emit(j.dump(2) + "\n", out_path, out);
}

}  // namespace detail

// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally repairable code construction, analysis and verification", "locrep"};
  app.require_subcommand(1);

  std::string out_path;
  std::string code_path;

  auto* build = app.add_subcommand("build", "Construct a code and write it as JSON");
  std::string family;
  int r = 0, file_size = 0;
  std::optional<int> degree;
  build->add_option("--family", family, "Code family (square)")->required();
  build->add_option("--r", r, "Locality parameter r")->required();
  build->add_option("--M", file_size, "File size M")->required();
  build->add_option("--m", degree, "Field degree (default r^2)");
  build->add_option("-o,--output", out_path, "Output file");

  auto* distance = app.add_subcommand("distance", "Brute-force minimum distance");
  distance->add_option("code", code_path, "Code JSON file")->required();
  distance->add_option("-o,--output", out_path, "Output file");

  auto* phi_cmd = app.add_subcommand("phi", "Exact Phi(0..x_max) with witnesses");
  int x_max = 0;
  std::optional<int> size_cap;
  phi_cmd->add_option("code", code_path, "Code JSON file")->required();
  phi_cmd->add_option("--x-max", x_max, "Largest x")->required()->check(CLI::NonNegativeNumber);
  phi_cmd->add_option("--cap", size_cap, "Regenerating-set size cap");
  phi_cmd->add_option("-o,--output", out_path, "Output file");

  auto* rho_cmd = app.add_subcommand("rho", "Exact rho with its Phi profile");
  rho_cmd->add_option("code", code_path, "Code JSON file")->required();
  rho_cmd->add_option("--cap", size_cap, "Regenerating-set size cap");
  rho_cmd->add_option("-o,--output", out_path, "Output file");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a distance bound");
  std::string theorem;
  BoundParams params;
  bounds_cmd->add_option("--theorem", theorem, "general|locality_r|lrc|rdc|square")->required();
  bounds_cmd->add_option("--n", params.n, "Code length")->required();
  bounds_cmd->add_option("--M", params.file_size, "File size")->required();
  bounds_cmd->add_option("--alpha", params.alpha, "Fragment size (default 1)");
  bounds_cmd->add_option("--r", params.r, "Locality");
  bounds_cmd->add_option("--delta", params.delta, "Repair tolerance plus one");
  bounds_cmd->add_option("--rho", params.rho, "rho (theorem general)");
  bounds_cmd->add_option("-o,--output", out_path, "Output file");

  auto* verify = app.add_subcommand("verify", "Check locality or square-code optimality");
  std::optional<int> locality, delta;
  bool optimal_square = false;
  verify->add_option("code", code_path, "Code JSON file")->required();
  auto* loc_opt = verify->add_option("--locality", locality, "Locality r");
  auto* delta_opt = verify->add_option("--delta", delta, "delta (repair tolerance + 1)");
  auto* opt_flag = verify->add_flag("--optimal-square", optimal_square,
                                    "Check d = n - M + 1 - s by brute force");
  loc_opt->needs(delta_opt);
  delta_opt->needs(loc_opt);
  opt_flag->excludes(loc_opt);
  opt_flag->excludes(delta_opt);
  verify->add_option("-o,--output", out_path, "Output file");

  auto* repair = app.add_subcommand("repair", "Plan local repair of an erasure pattern");
  std::vector<int> erase;
  int cap = 0;
  repair->add_option("code", code_path, "Code JSON file")->required();
  repair->add_option("--erase", erase, "Failed coordinates, 1-based, comma separated")
      ->delimiter(',');
  repair->add_option("--cap", cap, "Locality cap r")->required();
  repair->add_option("-o,--output", out_path, "Output file");

  auto* table = app.add_subcommand("table", "Square vs disjoint-repair-set bound, as CSV");
  table->add_option("--r", r, "Locality parameter r")->required();
  table->add_option("-o,--output", out_path, "Output file");

  std::vector<const char*> argv{"locrep"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const SearchLimits limits = SearchLimits::from_env();

    if (build->parsed()) {
      if (family != "square") throw UsageError("unknown code family '" + family + "'");
      std::optional<FieldSpec> field;
      if (degree) field.emplace(*degree);
      const SquareCode sc = build_square_code(r, file_size, field);
      detail::emit_json(io::code_to_json(sc.code), out_path, out);
      return kOk;
    }

    if (distance->parsed()) {
      const LinearCode code = detail::load_code(code_path);
      detail::emit_json({{"d", min_distance(code, limits)}}, out_path, out);
      return kOk;
    }

    if (phi_cmd->parsed()) {
      const LinearCode code = detail::load_code(code_path);
      const PhiProfile p =
          phi_profile(code, x_max, size_cap.value_or(default_size_cap(code)), limits);
      detail::emit_json(io::profile_to_json(p), out_path, out);
      return kOk;
    }

    if (rho_cmd->parsed()) {
      const LinearCode code = detail::load_code(code_path);
      const PhiProfile p = rho_profile(code, size_cap.value_or(default_size_cap(code)), limits);
      detail::emit_json(io::profile_to_json(p), out_path, out);
      return kOk;
    }

    if (bounds_cmd->parsed()) {
      const auto t = parse_theorem(theorem);
      if (!t) throw UsageError("unknown theorem '" + theorem + "'");
      detail::emit_json(io::bound_to_json(evaluate_bound(*t, params)), out_path, out);
      return kOk;
    }

    if (verify->parsed()) {
      const LinearCode code = detail::load_code(code_path);
      if (optimal_square) {
        if (!code.metadata() || code.metadata()->family != "square") {
          throw UsageError("--optimal-square needs a code with square-family metadata");
        }
        const int sr = code.metadata()->r;
        const int d = min_distance(code, limits);
        const int bound = bound_square(code.length(), code.file_size(), sr);
        detail::emit_json({{"optimal", d == bound}, {"d", d}, {"bound", bound}}, out_path, out);
        return d == bound ? kOk : kVerificationFailed;
      }
      if (!locality) throw UsageError("verify needs --locality R --delta D or --optimal-square");
      const auto violation = find_locality_violation(code, *locality, *delta);
      io::json j = {{"locality", *locality}, {"delta", *delta}, {"holds", !violation}};
      if (violation) {
        j["violation"] = {{"coordinate", violation->coordinate + 1},
                          {"other_erasures", io::members_json(violation->other_erasures)}};
      }
      detail::emit_json(j, out_path, out);
      return violation ? kVerificationFailed : kOk;
    }

    if (repair->parsed()) {
      const LinearCode code = detail::load_code(code_path);
      std::vector<int> zero_based;
      for (int e : erase) zero_based.push_back(e - 1);
      const CoordSet failed = CoordSet::from_members(zero_based, code.length());
      const RepairPlan plan = plan_repair(code, failed, cap);

      // Round trip on a fixed pseudo-random message so output is reproducible.
      std::mt19937_64 rng(0x5eed);
      std::vector<FieldElement> message(code.file_size());
      for (FieldElement& s : message) s = {rng() & (code.field().order() - 1)};
      const std::vector<FieldElement> word = code.encode(message);
      std::vector<std::optional<FieldElement>> damaged(word.begin(), word.end());
      for (int c : failed.members()) damaged[c].reset();
      const bool restored = execute_repair(code.field(), damaged, plan) == word;

      io::json j = io::plan_to_json(plan);
      j["roundtrip_ok"] = restored;
      detail::emit_json(j, out_path, out);
      return restored ? kOk : kVerificationFailed;
    }

    if (table->parsed()) {
      detail::emit(compare_table_csv(compare_table(r)), out_path, out);
      return kOk;
    }
  } catch (const RepairError& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace locrep::cli
