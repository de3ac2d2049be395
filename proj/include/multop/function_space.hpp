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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multop/matrix.hpp"
#include "multop/measure_space.hpp"

namespace multop {

/// A C^N-valued function given by its values on the materialized atoms. In
/// sequence mode the function vanishes on the tail.
class VectorFunction {
 public:
  VectorFunction(SpacePtr space, int dim);
  VectorFunction(SpacePtr space, std::vector<CVector> values);

  const SpacePtr& space() const { return space_; }
  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  const CVector& operator[](std::size_t i) const { return values_[i]; }
  CVector& operator[](std::size_t i) { return values_[i]; }
  const std::vector<CVector>& values() const { return values_; }

  /// ||f(x_i)||_sup
  double pointwise_norm(std::size_t i) const { return sup_norm(values_[i]); }

  VectorFunction& operator+=(const VectorFunction& other);
  VectorFunction& operator-=(const VectorFunction& other);
  VectorFunction& operator*=(Complex scale);

 private:
  SpacePtr space_;
  int dim_;
  std::vector<CVector> values_;
};

VectorFunction operator+(VectorFunction a, const VectorFunction& b);
VectorFunction operator-(VectorFunction a, const VectorFunction& b);
VectorFunction operator*(Complex s, VectorFunction a);

/// 1_E * z: equal to z on members of E, zero elsewhere.
VectorFunction indicator(const MeasurableSet& set, const CVector& z);
/// f * 1_E
VectorFunction restrict_to(const VectorFunction& f, const MeasurableSet& set);
/// Sup over atoms of ||f(x_i) - g(x_i)||_sup, ignoring weights.
double max_pointwise_distance(const VectorFunction& f, const VectorFunction& g);

/// Young function Phi for Orlicz spaces.
class YoungFunction {
 public:
  /// Built-in Delta_2 functions: "tp" = t^p, "tp_log" = t^p log(1+t),
  /// "quad_rational" = t^2/(1+t) + t^2.
  static YoungFunction builtin(const std::string& id, double p);
  /// Arbitrary Phi; no convexity or monotonicity is enforced.
  static YoungFunction custom(std::string id, std::function<double(double)> phi);

  double operator()(double t) const { return phi_(t); }
  const std::string& id() const { return id_; }
  double p() const { return p_; }

  /// Phi(0) = 0, Phi nondecreasing and convex on a grid over [0, upper].
  bool shape_ok(double upper = 50.0, int points = 2001) const;

 private:
  std::string id_;
  double p_ = 0.0;
  std::function<double(double)> phi_;
};

/// A Banach function norm on the discretized space, composed with the pointwise
/// sup-norm on C^N.
class NormSpec {
 public:
  enum class Family { Lp, Orlicz, Lorentz };

  /// p in [1, inf]; pass infinity for L^inf.
  static NormSpec lp(double p);
  /// Validates the shape of Phi on a grid.
  static NormSpec orlicz(YoungFunction phi);
  /// Skips validation. For fixtures that need a defective Phi.
  static NormSpec orlicz_unchecked(YoungFunction phi);
  /// p in (0, inf), q in (0, inf].
  static NormSpec lorentz(double p, double q);

  Family family() const { return family_; }
  double p() const { return p_; }
  double q() const { return q_; }
  const YoungFunction& phi() const { return *phi_; }

  /// Whether the space has absolutely continuous norm: L^p with p < inf, the
  /// built-in Delta_2 Orlicz functions, Lorentz with q < inf.
  bool absolutely_continuous() const;
  std::string describe() const;

 private:
  Family family_ = Family::Lp;
  double p_ = 2.0;
  double q_ = 2.0;
  std::optional<YoungFunction> phi_;
};

double norm(const VectorFunction& f, const NormSpec& ns);

/// Luxemburg norm together with the level sum_i w_i Phi(|f_i| / k) at the
/// returned k (exactly 1 up to bisection width for non-zero f).
struct LuxemburgResult {
  double norm = 0.0;
  double level = 0.0;
};
LuxemburgResult luxemburg(const VectorFunction& f, const YoungFunction& phi);

struct Step {
  double value;
  double width;
};

/// Decreasing rearrangement of ||f(x)||_sup over positive-weight atoms, with
/// equal neighbouring values merged. Finite mode only.
std::vector<Step> decreasing_rearrangement(const VectorFunction& f);

/// L^{p,q} norm of a decreasing step function.
double lorentz_norm_of_steps(const std::vector<Step>& steps, double p, double q);

struct SetConstant {
  double measure = 0.0;
  double sampled = 0.0;                  // best observed int_E ||f|| / ||f||_X
  std::optional<double> closed_form;     // mu(E)^{1/p'} for L^p
};

struct AxiomReport {
  std::size_t monotonicity_violations = 0;
  std::size_t fatou_violations = 0;
  std::size_t local_integrability_violations = 0;
  std::size_t samples = 0;
  std::vector<SetConstant> set_constants;
  bool passed() const {
    return monotonicity_violations == 0 && fatou_violations == 0 &&
           local_integrability_violations == 0;
  }
};

/// Samples the three function-norm axioms: monotonicity under pointwise
/// domination, the Fatou property along increasing truncations, and the local
/// integrability constant C_E. Deterministic for a given seed.
AxiomReport verify_axioms(const NormSpec& ns, const SpacePtr& space, std::size_t sample_count,
                          std::uint64_t seed = 0, int dim = 2);

struct AbsoluteContinuityResult {
  bool absolutely_continuous = false;
  std::vector<double> norms;
};

/// ||f 1_{E_n}|| along nested sets E_0 >= E_1 >= ...; true iff the sequence is
/// nonincreasing and ends below 1e-10. Throws DomainError if the sets are not
/// nested.
AbsoluteContinuityResult absolute_continuity_check(const VectorFunction& f,
                                                   const std::vector<MeasurableSet>& sets,
                                                   const NormSpec& ns);

/// Exact associate norm of f for L^p: (sum_i w_i ||f_i||_1^{p'})^{1/p'}. The
/// l^1 norm is the dual of the pointwise sup-norm.
double lp_associate_norm(const VectorFunction& f, double p);

/// Lower bound on ||f||_{X'} from random test functions g:
/// max |sum_i w_i <f_i, g_i>| / ||g||_X.
double associate_norm_estimate(const VectorFunction& f, const NormSpec& ns, std::size_t trials,
                               std::uint64_t seed = 0);

}  // namespace multop
