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

#include "multop/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "multop/errors.hpp"

namespace multop {

GaussLegendreRule::GaussLegendreRule(int n) {
  nodes.resize(static_cast<std::size_t>(n));
  weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

const GaussLegendreRule& GaussLegendreRule::ten() {
  static const GaussLegendreRule rule(10);
  return rule;
}

namespace {

CMatrix panel(const std::function<CMatrix(double)>& f, double a, double b) {
  const GaussLegendreRule& rule = GaussLegendreRule::ten();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  CMatrix sum = rule.weights[0] * f(mid + half * rule.nodes[0]);
  for (std::size_t k = 1; k < rule.nodes.size(); ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  return half * sum;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

struct Panel {
  double a, b;
  CMatrix whole;
  int depth;
};

}  // namespace

CMatrix integrate(const std::function<CMatrix(double)>& f, double a, double b, double rel_tol,
                  int initial_panels, int max_depth) {
  if (b == a) {
    const CMatrix probe = f(a);
    return CMatrix::Zero(probe.rows(), probe.cols());
  }
  std::vector<Panel> stack;
  CMatrix estimate;
  const double width = (b - a) / initial_panels;
  for (int k = 0; k < initial_panels; ++k) {
    const double lo = a + k * width;
    const double hi = k + 1 == initial_panels ? b : lo + width;
    Panel p{lo, hi, panel(f, lo, hi), 0};
    estimate = k == 0 ? p.whole : CMatrix(estimate + p.whole);
    stack.push_back(std::move(p));
  }
  const double scale = std::max(max_abs(estimate), 1e-300);

  CMatrix total = CMatrix::Zero(estimate.rows(), estimate.cols());
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    CMatrix left = panel(f, p.a, mid);
    CMatrix right = panel(f, mid, p.b);
    const double err = max_abs(p.whole - left - right);
    if (err <= rel_tol * scale * (p.b - p.a) / (b - a) || err <= 1e-15 * scale) {
      total += left + right;
      continue;
    }
    if (p.depth >= max_depth) throw ConvergenceError("adaptive quadrature did not converge", err);
    stack.push_back({mid, p.b, std::move(right), p.depth + 1});
    stack.push_back({p.a, mid, std::move(left), p.depth + 1});
  }
  return total;
}

}  // namespace multop
