// Copyright 2026 The multop Authors.
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

// Self-verification: the analytic formulas against brute-force and
// independent numerical paths on seeded random fixtures.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "multop/config.hpp"

namespace multop {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed deviation (or the quantity named in detail)
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Test fixture: replaces the row-sum norm by the column-sum norm in the
  /// analytic operator norm, which the norm check must catch.
  bool inject_norm_fault = false;
};

/// Seeded generator for stream `stream` of a run with seed `seed`.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

CheckResult check_norm_formula(const SuiteOptions& options);
CheckResult check_spectrum(const SuiteOptions& options);
CheckResult check_inverse(const SuiteOptions& options);
CheckResult check_closed_range(const SuiteOptions& options);
CheckResult check_compactness(const SuiteOptions& options);
CheckResult check_fredholm(const SuiteOptions& options);
CheckResult check_commutant(const SuiteOptions& options);
CheckResult check_semigroup_law(const SuiteOptions& options);
CheckResult check_acp_solution(const SuiteOptions& options);
CheckResult check_spectral_mapping(const SuiteOptions& options);
CheckResult check_integrated_semigroup(const SuiteOptions& options);
CheckResult check_function_space_axioms(const SuiteOptions& options);

/// All twelve checks above, in order.
std::vector<CheckResult> run_builtin_suite(const SuiteOptions& options);

/// The checks that apply to the single symbol of a configuration.
std::vector<CheckResult> run_config_suite(const ProblemConfig& config, const SuiteOptions& options);

/// One line per check: "PASS <name> measured=<m> tol=<t> <detail>".
void write_results(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace multop
