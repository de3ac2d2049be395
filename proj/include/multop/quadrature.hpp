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

#include <functional>
#include <vector>

#include "multop/matrix.hpp"

namespace multop {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int n);
  static const GaussLegendreRule& ten();
};

/// Adaptive Gauss-Legendre quadrature of a matrix-valued integrand over [a, b]
/// by interval halving. A panel is accepted when the 10-point rule on it and on
/// its two halves differ by at most rel_tol * ||estimate|| scaled to the panel
/// length. Throws ConvergenceError past max_depth halvings.
CMatrix integrate(const std::function<CMatrix(double)>& f, double a, double b, double rel_tol,
                  int initial_panels = 4, int max_depth = 40);

}  // namespace multop
