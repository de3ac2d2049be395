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

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "multop/expression.hpp"
#include "multop/matrix.hpp"
#include "multop/measure_space.hpp"

namespace multop {

/// Monotone bound for the unmaterialized atoms k > truncation of a
/// sequence-mode symbol: ||u(a_k)|| <= norm_bound(k), and optionally
/// s(u(a_k)) <= spectral_bound(k). Each bound is monotone in k and converges to
/// its declared limit (which may be +inf).
struct TailEnvelope {
  Expression norm_bound = Expression::constant(0.0);
  double norm_limit = 0.0;
  std::optional<Expression> spectral_bound;
  double spectral_limit = 0.0;
};

/// A measurable matrix-valued function u: Omega -> M_N(C).
class SymbolFunction {
 public:
  struct Constant {
    CMatrix value;
  };
  struct Table {
    std::vector<CMatrix> values;
  };
  struct ExprMatrix {
    int n = 1;
    std::vector<Expression> entries;  // row-major, n * n
  };
  using Body = std::variant<Constant, Table, ExprMatrix>;

  static SymbolFunction constant(SpacePtr space, CMatrix value);
  static SymbolFunction table(SpacePtr space, std::vector<CMatrix> values);
  static SymbolFunction expressions(SpacePtr space, int n, std::vector<Expression> entries);
  /// Scalar multiple of the identity.
  static SymbolFunction identity(SpacePtr space, int n, Complex scale = 1.0);

  int dim() const { return dim_; }
  const SpacePtr& space() const { return space_; }
  const Body& body() const { return body_; }
  bool is_constant() const { return std::holds_alternative<Constant>(body_); }

  /// u at atom i. Tail atoms of a sequence space are available unless the body
  /// is a table. Throws NonFiniteSymbolError when an entry is NaN or infinite.
  CMatrix eval_at(std::size_t atom) const;
  bool evaluable_at(std::size_t atom) const;

  const std::optional<TailEnvelope>& envelope() const { return envelope_; }
  SymbolFunction with_envelope(std::optional<TailEnvelope> envelope) const;

  /// The same function on refine(space, factor): children inherit their
  /// parent's value.
  SymbolFunction refined(SpacePtr refined_space, int factor) const;

 private:
  SymbolFunction(SpacePtr space, int dim, Body body);

  SpacePtr space_;
  int dim_ = 1;
  Body body_;
  std::optional<TailEnvelope> envelope_;
};

/// Tabulated pointwise product u(x) * v(x) over the materialized atoms.
SymbolFunction multiply(const SymbolFunction& u, const SymbolFunction& v);

/// Certified supremum of a monotone envelope over the atoms beyond the
/// truncation: max(bound(first tail coordinate), limit).
double envelope_tail_sup(const Expression& bound, double limit, const MeasureSpace& space);

/// Samples the declared envelope on a geometric grid of tail atoms and checks
/// it is monotone, consistent with its limit, and (when the body can be
/// evaluated on the tail) that it dominates ||u|| and s(u). Throws ConfigError
/// on a violation. Returns the number of sampled atoms.
std::size_t validate_envelope(const SymbolFunction& u);

/// Geometric sample of tail atom indices k-1 for k from truncation+1 up to
/// max_coordinate.
std::vector<std::size_t> tail_sample_atoms(const MeasureSpace& space, double max_coordinate = 1e12);

}  // namespace multop
