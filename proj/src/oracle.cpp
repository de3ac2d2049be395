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

#include "multop/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "multop/errors.hpp"
#include "multop/random.hpp"

namespace multop {

DenseOperator assemble_dense(const SymbolFunction& u) {
  const MeasureSpace& space = *u.space();
  if (!space.is_finite()) throw DomainError("assemble_dense needs a finite-mode space");
  const int n = u.dim();
  const Eigen::Index total = static_cast<Eigen::Index>(space.size()) * n;
  DenseOperator d{u.space(), n, CMatrix::Zero(total, total)};
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Eigen::Index off = static_cast<Eigen::Index>(i) * n;
    d.matrix.block(off, off, n, n) = u.eval_at(i);
  }
  return d;
}

CVector stack(const VectorFunction& f) {
  const int n = f.dim();
  CVector out(static_cast<Eigen::Index>(f.size()) * n);
  for (std::size_t i = 0; i < f.size(); ++i) out.segment(static_cast<Eigen::Index>(i) * n, n) = f[i];
  return out;
}

VectorFunction unstack(const SpacePtr& space, int block, const CVector& column) {
  std::vector<CVector> values(space->size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = column.segment(static_cast<Eigen::Index>(i) * block, block);
  return VectorFunction(space, std::move(values));
}

double operator_norm_estimate(const DenseOperator& d, const NormSpec& ns, std::size_t trials,
                              std::uint64_t seed) {
  if (trials < 1) throw DomainError("operator_norm_estimate needs trials >= 1");
  const MeasureSpace& space = *d.space;
  const int n = d.block;
  double best = 0.0;
  auto probe = [&](const CVector& column) {
    const VectorFunction f = unstack(d.space, n, column);
    const double fn = norm(f, ns);
    if (!(fn > 0.0)) return;
    best = std::max(best, norm(unstack(d.space, n, d.matrix * column), ns) / fn);
  };

  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    CVector column(d.dimension());
    for (Eigen::Index k = 0; k < column.size(); ++k) column(k) = random_complex(rng);
    probe(column);
  }

  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) continue;
    const Eigen::Index off = static_cast<Eigen::Index>(i) * n;
    const CMatrix blk = d.matrix.block(off, off, n, n);
    Eigen::Index row = 0;
    blk.cwiseAbs().rowwise().sum().maxCoeff(&row);
    CVector column = CVector::Zero(d.dimension());
    for (int j = 0; j < n; ++j) {
      const Complex a = blk(row, j);
      column(off + j) = std::abs(a) > 0.0 ? std::conj(a) / std::abs(a) : Complex(1.0);
    }
    probe(column);
  }
  return best;
}

std::vector<Complex> dense_eigenvalues(const DenseOperator& d) {
  if (d.dimension() > kMaxDenseDim) throw DomainError("dense_eigenvalues is capped at 512 unknowns");
  return eigenvalues(d.matrix).values;
}

}  // namespace multop
