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

// Brute-force reference: the discretized operator as one dense matrix.

#include <cstdint>
#include <vector>

#include "multop/function_space.hpp"
#include "multop/symbol.hpp"

namespace multop {

inline constexpr int kMaxDenseDim = 512;

struct DenseOperator {
  SpacePtr space;
  int block = 1;   // N
  CMatrix matrix;  // (n N) x (n N), block i = u(x_i)

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// Finite mode only; throws DomainError on a sequence-mode space.
DenseOperator assemble_dense(const SymbolFunction& u);

/// Stacks f(x_0), f(x_1), ... into one column.
CVector stack(const VectorFunction& f);
VectorFunction unstack(const SpacePtr& space, int block, const CVector& column);

/// max ||D f||_X / ||f||_X over `trials` random f and the single-atom probes
/// 1_{x_i} z, where z aligns with the largest row of block i.
double operator_norm_estimate(const DenseOperator& d, const NormSpec& ns, std::size_t trials,
                              std::uint64_t seed = 0);

/// All eigenvalues of the dense matrix, ignoring its block structure.
std::vector<Complex> dense_eigenvalues(const DenseOperator& d);

}  // namespace multop
