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

#include "multop/symbol.hpp"

#include <cmath>

#include "multop/errors.hpp"

namespace multop {

SymbolFunction::SymbolFunction(SpacePtr space, int dim, Body body)
    : space_(std::move(space)), dim_(dim), body_(std::move(body)) {
  if (!space_) throw DomainError("symbol needs a measure space");
  if (dim_ < 1 || dim_ > kMaxSymbolDim)
    throw DomainError("symbol dimension must lie in [1, " + std::to_string(kMaxSymbolDim) + "]");
}

SymbolFunction SymbolFunction::constant(SpacePtr space, CMatrix value) {
  if (value.rows() != value.cols()) throw DomainError("constant symbol must be square");
  if (!all_finite(value)) throw NumericError("constant symbol has non-finite entries");
  const int n = static_cast<int>(value.rows());
  return SymbolFunction(std::move(space), n, Constant{std::move(value)});
}

SymbolFunction SymbolFunction::table(SpacePtr space, std::vector<CMatrix> values) {
  if (!space) throw DomainError("symbol needs a measure space");
  if (values.size() != space->size()) throw DomainError("table length differs from atom count");
  const int n = static_cast<int>(values.front().rows());
  for (const CMatrix& m : values)
    if (m.rows() != n || m.cols() != n) throw DomainError("table entries must all be N x N");
  return SymbolFunction(std::move(space), n, Table{std::move(values)});
}

SymbolFunction SymbolFunction::expressions(SpacePtr space, int n, std::vector<Expression> entries) {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DomainError("expression matrix must have N * N entries");
  return SymbolFunction(std::move(space), n, ExprMatrix{n, std::move(entries)});
}

SymbolFunction SymbolFunction::identity(SpacePtr space, int n, Complex scale) {
  return constant(std::move(space), scale * CMatrix::Identity(n, n));
}

bool SymbolFunction::evaluable_at(std::size_t atom) const {
  if (atom < space_->size()) return true;
  return !space_->is_finite() && !std::holds_alternative<Table>(body_);
}

CMatrix SymbolFunction::eval_at(std::size_t atom) const {
  if (!evaluable_at(atom)) throw DomainError("symbol cannot be evaluated at atom " + std::to_string(atom));
  CMatrix out;
  if (const auto* c = std::get_if<Constant>(&body_)) {
    out = c->value;
  } else if (const auto* t = std::get_if<Table>(&body_)) {
    out = t->values[atom];
  } else {
    const auto& e = std::get<ExprMatrix>(body_);
    const double x = space_->coordinate(atom);
    out.resize(e.n, e.n);
    for (int i = 0; i < e.n; ++i)
      for (int j = 0; j < e.n; ++j)
        out(i, j) = e.entries[static_cast<std::size_t>(i * e.n + j)].evaluate(x);
  }
  if (!all_finite(out)) throw NonFiniteSymbolError(atom);
  return out;
}

SymbolFunction SymbolFunction::with_envelope(std::optional<TailEnvelope> envelope) const {
  SymbolFunction copy = *this;
  copy.envelope_ = std::move(envelope);
  return copy;
}

SymbolFunction SymbolFunction::refined(SpacePtr refined_space, int factor) const {
  if (refined_space->size() != space_->size() * static_cast<std::size_t>(factor))
    throw DomainError("refined space does not match refinement factor");
  if (const auto* t = std::get_if<Table>(&body_)) {
    std::vector<CMatrix> values;
    values.reserve(refined_space->size());
    for (const CMatrix& m : t->values)
      for (int c = 0; c < factor; ++c) values.push_back(m);
    return table(std::move(refined_space), std::move(values));
  }
  return SymbolFunction(std::move(refined_space), dim_, body_);
}

SymbolFunction multiply(const SymbolFunction& u, const SymbolFunction& v) {
  if (u.dim() != v.dim()) throw DomainError("symbol product: dimension mismatch");
  if (u.space() != v.space()) throw DomainError("symbol product: different spaces");
  std::vector<CMatrix> values;
  values.reserve(u.space()->size());
  for (std::size_t i = 0; i < u.space()->size(); ++i) values.push_back(u.eval_at(i) * v.eval_at(i));
  return SymbolFunction::table(u.space(), std::move(values));
}

namespace {

double real_value(const Expression& e, double x) {
  const Complex v = e.evaluate(x);
  if (std::isnan(v.real()) || std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
    throw ConfigError("tail envelope must be real valued");
  return v.real();
}

}  // namespace

double envelope_tail_sup(const Expression& bound, double limit, const MeasureSpace& space) {
  const double first = real_value(bound, space.coordinate(space.size()));
  return std::max(first, limit);
}

std::vector<std::size_t> tail_sample_atoms(const MeasureSpace& space, double max_coordinate) {
  std::vector<std::size_t> atoms;
  if (space.is_finite()) return atoms;
  double k = static_cast<double>(space.size() + 1);
  while (k <= max_coordinate) {
    atoms.push_back(static_cast<std::size_t>(k) - 1);
    k = std::floor(k * 2.0);
  }
  return atoms;
}

std::size_t validate_envelope(const SymbolFunction& u) {
  const MeasureSpace& space = *u.space();
  if (space.is_finite()) return 0;
  if (!u.envelope()) throw ConfigError("sequence-mode symbol needs a tail envelope");
  const TailEnvelope& env = *u.envelope();
  const std::vector<std::size_t> atoms = tail_sample_atoms(space);

  auto check_monotone = [&](const Expression& bound, double limit, const char* what) {
    std::vector<double> values;
    for (std::size_t a : atoms) values.push_back(real_value(bound, space.coordinate(a)));
    const double first = values.front();
    const bool increasing = limit > first;
    for (std::size_t j = 1; j < values.size(); ++j) {
      const double slack = 1e-12 * (1.0 + std::abs(values[j - 1]));
      const bool ok = increasing ? values[j] >= values[j - 1] - slack : values[j] <= values[j - 1] + slack;
      if (!ok) throw ConfigError(std::string("tail envelope '") + what + "' is not monotone");
      const bool within = increasing ? values[j] <= limit + slack : values[j] >= limit - slack;
      if (!within) throw ConfigError(std::string("tail envelope '") + what + "' crosses its limit");
    }
  };
  check_monotone(env.norm_bound, env.norm_limit, "norm");
  if (env.spectral_bound) check_monotone(*env.spectral_bound, env.spectral_limit, "spectral_bound");

  if (!u.evaluable_at(space.size())) return atoms.size();
  for (std::size_t a : atoms) {
    const double x = space.coordinate(a);
    CMatrix m;
    try {
      m = u.eval_at(a);
    } catch (const NonFiniteSymbolError&) {
      throw ConfigError("symbol is not finite at tail atom " + std::to_string(a));
    }
    const double bound = real_value(env.norm_bound, x);
    if (sup_induced_norm(m) > bound * (1.0 + 1e-12) + 1e-300)
      throw ConfigError("tail envelope 'norm' does not dominate ||u|| at atom " + std::to_string(a));
    if (env.spectral_bound) {
      const double sb = real_value(*env.spectral_bound, x);
      if (spectral_bound(m) > sb + 1e-9 * (1.0 + std::abs(sb)))
        throw ConfigError("tail envelope 'spectral_bound' does not dominate s(u) at atom " +
                          std::to_string(a));
    }
  }
  return atoms.size();
}

}  // namespace multop
