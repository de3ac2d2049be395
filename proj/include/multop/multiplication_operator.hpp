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

// The multiplication operator M_u f = u * f and its analyzers.

#include <optional>
#include <string>
#include <vector>

#include "multop/function_space.hpp"
#include "multop/symbol.hpp"

namespace multop {

inline constexpr double kDefaultTol = 1e-9;

enum class Verdict { True, False, NotApplicable, Undetermined };

const char* to_string(Verdict v);
inline Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }

/// A point set in C built from the materialized positive-weight atoms, with
/// what the tail envelope certifies about the remaining atoms.
struct PointSet {
  enum class Tail {
    None,       // finite mode
    Exact,      // the tail repeats values already in `points`
    Disk,       // tail values lie in |z| <= tail_radius
    Unbounded,  // no bound on the tail
  };
  std::vector<Complex> points;        // sorted, duplicates removed
  std::vector<Complex> limit_points;  // closure points certified by the envelope
  Tail tail = Tail::None;
  double tail_radius = 0.0;

  bool bounded() const { return tail != Tail::Unbounded; }
  /// points together with limit_points.
  std::vector<Complex> closure() const;
};

const char* to_string(PointSet::Tail t);

/// g(x_i) = u(x_i) f(x_i) at every atom. Atoms of weight zero where u is not
/// finite map to zero.
VectorFunction apply(const SymbolFunction& u, const VectorFunction& f);

/// ||M_u|| = ess sup ||u(x)||, the maximum over positive-weight atoms of the
/// row-sum norm, raised to the tail envelope's supremum in sequence mode.
/// +inf when u is not finite at a positive-weight atom.
double operator_norm(const SymbolFunction& u);

/// inf { M >= 0 : mu({||u(x)|| > M}) = 0 }, evaluated through measure_of over
/// the candidate levels. Finite mode, or the materialized atoms only.
double operator_norm_least_bound(const SymbolFunction& u);

/// {u(x_i) : mu(x_i) > 0} for N = 1. Throws DomainError for N > 1.
PointSet essential_range(const SymbolFunction& u);

/// Union of the eigenvalues of u(x_i) over positive-weight atoms.
PointSet spectrum(const SymbolFunction& u);

struct InvertibilityResult {
  Verdict verdict = Verdict::False;
  double delta = 0.0;  // dist(0, spectrum) over the materialized atoms
  std::optional<SymbolFunction> inverse;
  double probe_residual = 0.0;  // max ||r u f - f||_sup / ||f||_sup over probes
};

/// Decided by dist(0, spectrum) >= tol and boundedness. On success `inverse`
/// holds r with r(x) = u(x)^{-1} on invertible atoms and 0 elsewhere.
InvertibilityResult is_invertible(const SymbolFunction& u, double tol = kDefaultTol);

struct Witness {
  std::size_t atom = 0;
  double ratio = 0.0;  // ||M_u 1_{atom}|| / ||1_{atom}||
};

struct ClosedRangeResult {
  Verdict verdict = Verdict::False;
  double delta = 0.0;  // min |u| over the support, +inf for empty support
  std::optional<Witness> witness;
  std::vector<std::size_t> support;  // materialized positive-weight atoms with u != 0
};

/// N = 1: closed range iff |u| >= tol on the support of u.
ClosedRangeResult has_closed_range(const SymbolFunction& u, double tol = kDefaultTol);

struct LevelSet {
  double eps = 0.0;
  bool finite = true;
  /// Upper bound on #{atoms : ||u|| >= eps}; +inf when unknown.
  double size_bound = 0.0;
};

struct CompactnessResult {
  Verdict verdict = Verdict::True;
  std::vector<LevelSet> levels;
  std::string note;
};

inline const std::vector<double>& default_eps_grid() {
  static const std::vector<double> grid = {1.0, 0.5, 0.1, 1e-2, 1e-3, 1e-6};
  return grid;
}

/// Compact iff each level set {||u|| >= eps} spans a finite-dimensional
/// subspace. Trivially true in finite mode; decided from the envelope in
/// sequence mode.
CompactnessResult is_compact(const SymbolFunction& u,
                             const std::vector<double>& eps_grid = default_eps_grid());

struct FredholmResult {
  Verdict verdict = Verdict::False;
  bool invertible = false;                 // (i)
  bool lower_bound_everywhere = false;     // (iv) |u| >= tol on all positive atoms
  bool closed_range_full_support = false;  // (iii) proxy
  double min_modulus = 0.0;
  bool agree = false;
  bool refine_stable = false;  // verdict unchanged on refine(., 2) and refine(., 4)
};

/// N = 1 on a nonatomic-flagged finite space with an absolutely continuous
/// norm; throws DomainError when a hypothesis fails.
FredholmResult is_fredholm(const SymbolFunction& u, const NormSpec& ns, double tol = kDefaultTol);

struct CommutantResult {
  bool accepted = false;
  std::optional<SymbolFunction> symbol;     // v = A e
  std::optional<std::size_t> witness_atom;  // singleton E with [A, M_{1_E}] != 0
  double commutator_norm = 0.0;             // largest over singletons
  double reconstruction_error = 0.0;        // ||A - M_v||
  bool bounded = false;                     // ||v||_inf <= ||A||
};

/// Recovers A = M_v when the n x n operator A commutes with every M_{1_E} for
/// singleton E. N = 1, finite mode.
CommutantResult commutant_recover(const CMatrix& a, const SpacePtr& space, double tol = 1e-10);

struct OperatorReport {
  int dim = 1;
  double operator_norm = 0.0;
  double operator_norm_least_bound = 0.0;
  std::optional<PointSet> essential_range;
  PointSet spectrum;
  Verdict bounded = Verdict::True;
  Verdict invertible = Verdict::False;
  Verdict closed_range = Verdict::NotApplicable;
  Verdict compact = Verdict::True;
  Verdict fredholm = Verdict::NotApplicable;
  double delta_invertibility = 0.0;
  std::optional<double> delta_closed_range;
  CompactnessResult compactness;
  std::optional<FredholmResult> fredholm_detail;
  std::vector<std::string> notes;
};

struct AnalyzeOptions {
  double tol = kDefaultTol;
  std::vector<double> eps_grid = default_eps_grid();
};

OperatorReport analyze(const SymbolFunction& u, const NormSpec& ns, const AnalyzeOptions& options = {});

}  // namespace multop
