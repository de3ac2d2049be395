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

// Dense complex matrix kernel for the small blocks u(x) of a symbol.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace multop {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Largest block dimension N accepted for symbol values.
inline constexpr int kMaxSymbolDim = 8;

/// Pivot threshold (relative to the row-sum norm) below which inverse()
/// declares a matrix singular.
inline constexpr double kSingularPivotRatio = 1e-13;

/// max_i |v_i|; the norm chosen on C^N throughout.
double sup_norm(const CVector& v);

/// Operator norm induced by the sup-norm: the maximal absolute row sum.
double sup_induced_norm(const CMatrix& a);

/// Eigenvalues with multiplicity and the worst normalized eigenpair residual
/// max_k ||A v_k - lambda_k v_k||_sup / ||v_k||_sup.
struct EigenSet {
  std::vector<Complex> values;
  double residual = 0.0;
};

/// Hessenberg reduction followed by Wilkinson-shifted complex QR.
/// Throws ConvergenceError when the iteration cap is exhausted.
EigenSet eigenvalues(const CMatrix& a);

/// Matrix exponential by scaling and squaring with diagonal Pade approximants.
CMatrix expm(const CMatrix& a);

/// LU inverse with partial pivoting. Throws SingularMatrixError when a pivot
/// falls below kSingularPivotRatio * sup_induced_norm(a).
CMatrix inverse(const CMatrix& a);

/// max Re(lambda) over the eigenvalues of a.
double spectral_bound(const CMatrix& a);

/// Hausdorff distance between two finite point sets in C. Two empty sets are
/// at distance 0; an empty set and a non-empty one at +inf.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Sorts by (re, im) and removes exact duplicates.
std::vector<Complex> unique_points(std::vector<Complex> points);

bool all_finite(const CMatrix& a);

}  // namespace multop
