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

// Multiplication semigroups T(t) = M_{exp(t u)} and the abstract Cauchy
// problem v' = M_u v, v(0) = x.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multop/function_space.hpp"
#include "multop/multiplication_operator.hpp"
#include "multop/symbol.hpp"

namespace multop {

inline constexpr double kGenerationCap = 1e6;

struct GenerationResult {
  bool generates_c0 = false;
  double c = 0.0;  // observed sup of ||exp(t u)||_inf over the grid
  std::vector<double> times;
  std::vector<double> norms;
  bool tail_certified = true;  // the tail bound is a proof, not a sample
  std::string note;
};

/// Evaluates g(t) = ess sup ||exp(t u(x))|| on t in {2^-j : j = 0..20}.
/// The operator generates a C0 semigroup when the sup stays below `cap` and g
/// does not grow above max(g, 1) by more than a factor 1 + 1e-6 between
/// successive grid points once t < 1e-3.
GenerationResult generation_check(const SymbolFunction& u, double cap = kGenerationCap);

/// Table symbol exp(t u(x_i)) on the materialized atoms.
SymbolFunction semigroup_at(const SymbolFunction& u, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<VectorFunction> values;
};

/// v(t_k) = T(t_k) x. The grid must be strictly ascending with t_0 >= 0;
/// v(0) = x exactly.
Trajectory solve_acp(const SymbolFunction& u, const VectorFunction& x, const std::vector<double>& t_grid);

/// Classical fourth-order Runge-Kutta on v' = u(x_i) v at each atom, with the
/// step adjusted to divide t_end evenly.
VectorFunction rk4_oracle(const SymbolFunction& u, const VectorFunction& x, double t_end, double h);

/// Hausdorff distance between sigma(T(t)) and exp(t sigma(M_u)).
double spectral_mapping_check(const SymbolFunction& u, double t);

/// Table symbol (lambda I - u(x_i))^{-1}. Throws DomainError when lambda lies
/// within 1e-9 of the spectrum.
SymbolFunction resolvent(const SymbolFunction& u, Complex lambda);

struct IntegratedCheck {
  bool generator = false;            // (iii): ess sup s(u(x)) < inf
  double w = 0.0;                    // ess sup s(u(x))
  bool half_plane = false;           // (ii): sigma(M_u) in {Re z <= w'} for some w'
  double w_from_spectrum = 0.0;      // max Re over the spectrum point set
  bool agree = false;
  bool resolvent_nonempty = false;   // certified only when M_u is bounded
};

IntegratedCheck integrated_semigroup_check(const SymbolFunction& u);

/// Default integration degree 2N + 1.
inline int default_integration_degree(int n) { return 2 * n + 1; }

/// S_m(t) = int_0^t (t-s)^{m-1}/(m-1)! exp(s u(x_i)) ds by adaptive
/// Gauss-Legendre quadrature; m = 0 returns semigroup_at(u, t).
SymbolFunction integrated_semigroup_at(const SymbolFunction& u, double t, int m);

/// S_m(t) for one matrix block.
CMatrix integrated_block(const CMatrix& a, double t, int m, double rel_tol = 1e-10);

struct LaplaceCheck {
  Complex lambda;
  int m = 0;
  double t_max = 0.0;
  double w_star = 0.0;
  double relative_error = 0.0;
};

/// Compares lambda^m int_0^{T_max} exp(-lambda t) S_m(t) y dt with
/// R(lambda, M_u) y for probe functions y. Needs Re lambda > w* + 1e-3. When
/// t_max is omitted it is chosen so that the truncated tail is below 1e-12.
LaplaceCheck laplace_identity_check(const SymbolFunction& u, Complex lambda, int m,
                                    std::optional<double> t_max = std::nullopt);

struct StabilityFit {
  double w_star = 0.0;
  double epsilon = 0.0;
  double fitted_m = 0.0;  // max_t ||v(t)|| / (exp((w*+eps) t) ||x||)
  std::vector<double> times;
  std::vector<double> norms;
};

/// Fits M in ||v(t)||_X <= M exp((w* + eps) t) ||x||_X over the trajectory.
StabilityFit stability_bound(const SymbolFunction& u, const VectorFunction& x, const NormSpec& ns,
                             const std::vector<double>& t_grid, double epsilon = 1e-3);

struct SemigroupReport {
  GenerationResult generation;
  IntegratedCheck integrated;
  int m = 1;
  std::optional<StabilityFit> stability;
};

/// CSV with header `t,atom_index,component,re,im`, 17 significant digits.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace multop
