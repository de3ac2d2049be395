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

// Problem configuration, read from a version-1 JSON document.
//
//   {
//     "version": 1,
//     "space":  {"mode": "finite", "coordinates": [...], "weights": [...], "nonatomic": false}
//             | {"mode": "sequence", "weight_rule": {"kind": "geometric" | "power",
//                "scale": 1, "parameter": 0.5}, "truncation": 64},
//     "symbol": {"kind": "constant", "n": 2, "value": M}
//             | {"kind": "table", "n": 2, "values": [M, ...]}
//             | {"kind": "expr", "n": 1, "entries": M},
//               optional "envelope": {"norm_bound": "1/x", "norm_limit": 0,
//                                     "spectral_bound": "-x", "spectral_limit": "-inf"},
//     "norm":   {"type": "lp", "p": 2} | {"type": "orlicz", "phi": "tp_log", "p": 2}
//             | {"type": "lorentz", "p": 2, "q": 1},
//     "task":   {"t_grid": [...], "lambda": z, "m": 1, "tol": 1e-9, "trials": 100,
//                "seed": 0, "initial": [z, ...], "eps_grid": [...], "t_max": 40}
//   }
//
// A matrix M is a row-major array, either nested by rows or flat with n * n
// entries; for n = 1 a bare scalar is accepted. A scalar z is a number, a pair
// [re, im] or an expression string. "inf" and "-inf" are accepted wherever a
// real may be infinite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multop/function_space.hpp"
#include "multop/multiplication_operator.hpp"
#include "multop/symbol.hpp"

namespace multop {

struct TaskParams {
  std::vector<double> t_grid = {0.0, 1.0};
  std::optional<Complex> lambda;
  std::optional<int> m;  // defaults to 2N + 1
  double tol = kDefaultTol;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::vector<Complex>> initial;  // constant in x; defaults to ones
  std::vector<double> eps_grid = default_eps_grid();
  std::optional<double> t_max;
};

struct ProblemConfig {
  SpacePtr space;
  SymbolFunction symbol;
  NormSpec norm;
  TaskParams task;
};

/// Throws ConfigError naming the offending key, e.g. "space.weights[2]".
ProblemConfig parse_config(std::string_view json_text);
ProblemConfig load_config(const std::string& path);

/// The initial value x of the Cauchy problem for a configuration.
VectorFunction initial_value(const ProblemConfig& config);

}  // namespace multop
