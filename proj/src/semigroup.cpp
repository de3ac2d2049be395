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

#include "multop/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "multop/errors.hpp"
#include "multop/quadrature.hpp"
#include "multop/random.hpp"

namespace multop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tail_norm_sup(const SymbolFunction& u) {
  if (const auto* c = std::get_if<SymbolFunction::Constant>(&u.body())) return sup_induced_norm(c->value);
  validate_envelope(u);
  const TailEnvelope& env = *u.envelope();
  return envelope_tail_sup(env.norm_bound, env.norm_limit, *u.space());
}

double tail_spectral_sup(const SymbolFunction& u) {
  if (const auto* c = std::get_if<SymbolFunction::Constant>(&u.body())) return spectral_bound(c->value);
  validate_envelope(u);
  const TailEnvelope& env = *u.envelope();
  if (env.spectral_bound) return envelope_tail_sup(*env.spectral_bound, env.spectral_limit, *u.space());
  return envelope_tail_sup(env.norm_bound, env.norm_limit, *u.space());
}

}  // namespace

GenerationResult generation_check(const SymbolFunction& u, double cap) {
  GenerationResult out;
  const MeasureSpace& space = *u.space();
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.positive(i)) blocks.push_back(u.eval_at(i));

  // Tail atoms: sample them when the body can be evaluated there, and bound
  // them through the envelope otherwise.
  double tail_rate = -kInf;  // ||exp(t u_k)|| <= exp(t * tail_rate)
  if (!space.is_finite() && !u.is_constant()) {
    if (u.evaluable_at(space.size())) {
      for (std::size_t a : tail_sample_atoms(space)) blocks.push_back(u.eval_at(a));
    }
    const double norm_sup = tail_norm_sup(u);
    if (std::isfinite(norm_sup)) {
      tail_rate = norm_sup;
    } else if (u.dim() == 1 && std::isfinite(tail_spectral_sup(u))) {
      tail_rate = tail_spectral_sup(u);
    } else {
      out.tail_certified = false;
      if (!u.evaluable_at(space.size())) tail_rate = kInf;
    }
  }

  for (int j = 0; j <= 20; ++j) {
    const double t = std::ldexp(1.0, -j);
    double g = 0.0;
    for (const CMatrix& b : blocks) g = std::max(g, sup_induced_norm(expm(t * b)));
    if (tail_rate > -kInf) g = std::max(g, std::exp(t * tail_rate));
    out.times.push_back(t);
    out.norms.push_back(g);
  }
  out.c = std::max(1.0, *std::max_element(out.norms.begin(), out.norms.end()));

  bool settles = true;
  for (std::size_t j = 1; j < out.norms.size(); ++j) {
    if (out.times[j] >= 1e-3) continue;
    if (std::max(out.norms[j], 1.0) > std::max(out.norms[j - 1], 1.0) * (1.0 + 1e-6)) settles = false;
  }
  out.generates_c0 = out.c <= cap && settles;
  if (!out.generates_c0) {
    out.note = out.c > cap ? "sup of ||exp(t u)|| over t in (0, 1] exceeds the cap" : "||exp(t u)|| grows as t -> 0";
  } else if (!out.tail_certified) {
    out.note = "tail bounded by sampling only";
  }
  return out;
}

SymbolFunction semigroup_at(const SymbolFunction& u, double t) {
  if (!(t >= 0.0)) throw DomainError("semigroup_at needs t >= 0");
  const MeasureSpace& space = *u.space();
  const int n = u.dim();
  std::vector<CMatrix> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (t == 0.0) {
      values[i] = CMatrix::Identity(n, n);
      continue;
    }
    try {
      values[i] = expm(t * u.eval_at(i));
    } catch (const NonFiniteSymbolError&) {
      if (space.positive(i)) throw;
      values[i] = CMatrix::Identity(n, n);
    }
  }
  SymbolFunction out = SymbolFunction::table(u.space(), std::move(values));
  if (!space.is_finite()) {
    const double norm_sup = u.is_constant() || u.envelope() ? tail_norm_sup(u) : kInf;
    if (std::isfinite(norm_sup)) {
      const double bound = std::exp(t * norm_sup);
      out = out.with_envelope(TailEnvelope{Expression::constant(bound), bound, std::nullopt, 0.0});
    }
  }
  return out;
}

Trajectory solve_acp(const SymbolFunction& u, const VectorFunction& x, const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw DomainError("time grid is empty");
  if (!(t_grid.front() >= 0.0)) throw DomainError("time grid must start at t >= 0");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1])) throw DomainError("time grid is not strictly ascending");
  Trajectory traj;
  for (double t : t_grid) {
    traj.times.push_back(t);
    traj.values.push_back(t == 0.0 ? x : apply(semigroup_at(u, t), x));
  }
  return traj;
}

VectorFunction rk4_oracle(const SymbolFunction& u, const VectorFunction& x, double t_end, double h) {
  if (!(h > 0.0)) throw DomainError("RK4 step must be positive");
  if (!(t_end >= 0.0)) throw DomainError("RK4 end time must be >= 0");
  const long steps = std::max(1L, std::lround(t_end / h));
  const double dt = t_end / static_cast<double>(steps);
  VectorFunction v = x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!x.space()->positive(i)) continue;
    const CMatrix a = u.eval_at(i);
    CVector y = x[i];
    for (long s = 0; s < steps; ++s) {
      const CVector k1 = a * y;
      const CVector k2 = a * (y + 0.5 * dt * k1);
      const CVector k3 = a * (y + 0.5 * dt * k2);
      const CVector k4 = a * (y + dt * k3);
      y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    v[i] = y;
  }
  return v;
}

double spectral_mapping_check(const SymbolFunction& u, double t) {
  const PointSet semigroup_spectrum = spectrum(semigroup_at(u, t));
  std::vector<Complex> mapped;
  for (const Complex& l : spectrum(u).points) mapped.push_back(std::exp(t * l));
  mapped = unique_points(std::move(mapped));
  return hausdorff_distance(semigroup_spectrum.points, mapped);
}

SymbolFunction resolvent(const SymbolFunction& u, Complex lambda) {
  const PointSet sigma = spectrum(u);
  for (const Complex& l : sigma.closure())
    if (std::abs(lambda - l) < 1e-9) throw DomainError("resolvent: lambda lies in the spectrum");
  if (sigma.tail == PointSet::Tail::Unbounded)
    throw DomainError("resolvent: the resolvent set is undetermined for an unbounded tail");
  if (sigma.tail == PointSet::Tail::Disk && !(std::abs(lambda) > sigma.tail_radius + 1e-9))
    throw DomainError("resolvent: lambda is not separated from the tail bound");

  const MeasureSpace& space = *u.space();
  const int n = u.dim();
  const CMatrix id = CMatrix::Identity(n, n);
  std::vector<CMatrix> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    try {
      values[i] = inverse(lambda * id - u.eval_at(i));
    } catch (const NonFiniteSymbolError&) {
      if (space.positive(i)) throw;
      values[i] = CMatrix::Zero(n, n);
    }
  }
  SymbolFunction r = SymbolFunction::table(u.space(), std::move(values));

  Rng rng(1);
  for (int k = 0; k < 3; ++k) {
    std::vector<CVector> vals(space.size());
    for (CVector& v : vals) v = random_vector(rng, n);
    const VectorFunction f(u.space(), std::move(vals));
    const VectorFunction back = apply(r, lambda * f - apply(u, f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!space.positive(i)) continue;
      if (sup_norm(back[i] - f[i]) > 1e-9 * std::max(1.0, f.pointwise_norm(i)) * std::max(1.0, sup_induced_norm(r.eval_at(i)) * sup_induced_norm(lambda * id - u.eval_at(i))))
        throw NumericError("resolvent certification failed at atom " + std::to_string(i));
    }
  }
  return r;
}

IntegratedCheck integrated_semigroup_check(const SymbolFunction& u) {
  IntegratedCheck out;
  const MeasureSpace& space = *u.space();

  // (iii) through the per-atom spectral bound.
  out.w = -kInf;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.positive(i)) out.w = std::max(out.w, spectral_bound(u.eval_at(i)));
  if (!space.is_finite()) out.w = std::max(out.w, tail_spectral_sup(u));
  out.generator = out.w < kInf;

  // (ii) through the spectrum as a point set.
  const PointSet sigma = spectrum(u);
  out.w_from_spectrum = -kInf;
  for (const Complex& l : sigma.closure()) out.w_from_spectrum = std::max(out.w_from_spectrum, l.real());
  if (sigma.tail == PointSet::Tail::Disk) out.w_from_spectrum = std::max(out.w_from_spectrum, sigma.tail_radius);
  if (sigma.tail == PointSet::Tail::Unbounded) {
    // Without a spectral envelope the half-plane can only be inferred from (iii).
    out.w_from_spectrum = out.w;
  }
  out.half_plane = out.w_from_spectrum < kInf;
  out.agree = out.half_plane == out.generator &&
              (!space.is_finite() || out.w_from_spectrum <= out.w + 1e-9);
  out.resolvent_nonempty = sigma.bounded();
  return out;
}

CMatrix integrated_block(const CMatrix& a, double t, int m, double rel_tol) {
  if (m < 0) throw DomainError("integration degree must be >= 0");
  if (!(t >= 0.0)) throw DomainError("integrated semigroup needs t >= 0");
  const Eigen::Index n = a.rows();
  if (m == 0) return t == 0.0 ? CMatrix(CMatrix::Identity(n, n)) : expm(t * a);
  if (t == 0.0) return CMatrix::Zero(n, n);
  const double factorial = std::tgamma(static_cast<double>(m));
  return integrate(
      [&](double s) -> CMatrix { return (std::pow(t - s, m - 1) / factorial) * expm(s * a); }, 0.0, t,
      rel_tol, 2);
}

SymbolFunction integrated_semigroup_at(const SymbolFunction& u, double t, int m) {
  if (m == 0) return semigroup_at(u, t);
  if (m < 0) throw DomainError("integration degree must be >= 0");
  if (!(t >= 0.0)) throw DomainError("integrated semigroup needs t >= 0");
  const MeasureSpace& space = *u.space();
  std::vector<CMatrix> values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) {
      values[i] = CMatrix::Zero(u.dim(), u.dim());
      continue;
    }
    values[i] = integrated_block(u.eval_at(i), t, m);
  }
  return SymbolFunction::table(u.space(), std::move(values));
}

LaplaceCheck laplace_identity_check(const SymbolFunction& u, Complex lambda, int m,
                                    std::optional<double> t_max) {
  if (m < 0) throw DomainError("integration degree must be >= 0");
  LaplaceCheck out;
  out.lambda = lambda;
  out.m = m;
  const IntegratedCheck ic = integrated_semigroup_check(u);
  out.w_star = ic.w;
  const double gap = lambda.real() - ic.w;
  if (!(gap > 1e-3)) throw DomainError("laplace check: Re lambda must exceed w* by a decay margin");
  if (t_max) {
    if (std::exp(-gap * *t_max) > 1e-12)
      throw DomainError("laplace check: T_max too short for the 1e-12 tail bound");
    out.t_max = *t_max;
  } else {
    // exp(-gap T) (1 + T)^(m + N) <= 1e-12, by fixed-point iteration.
    const double degree = m + u.dim();
    double tm = std::log(1e12) / gap;
    for (int k = 0; k < 50; ++k) tm = (std::log(1e12) + degree * std::log1p(tm)) / gap;
    out.t_max = tm;
  }

  const MeasureSpace& space = *u.space();
  const int n = u.dim();
  const Complex lambda_m = std::pow(lambda, m);
  std::vector<CMatrix> laplace(space.size(), CMatrix::Zero(n, n));
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) continue;
    const CMatrix a = u.eval_at(i);
    const CMatrix integral = integrate(
        [&](double t) -> CMatrix { return std::exp(-lambda * t) * integrated_block(a, t, m); }, 0.0, out.t_max,
        1e-10, 8);
    laplace[i] = lambda_m * integral;
  }
  const SymbolFunction l_sym = SymbolFunction::table(u.space(), std::move(laplace));
  const SymbolFunction r_sym = resolvent(u, lambda);

  Rng rng(2);
  std::vector<VectorFunction> probes;
  probes.emplace_back(u.space(), std::vector<CVector>(space.size(), CVector::Ones(n)));
  for (int k = 0; k < 3; ++k) {
    std::vector<CVector> vals(space.size());
    for (CVector& v : vals) v = random_vector(rng, n);
    probes.emplace_back(u.space(), std::move(vals));
  }
  for (const VectorFunction& y : probes) {
    const VectorFunction ly = apply(l_sym, y);
    const VectorFunction ry = apply(r_sym, y);
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!space.positive(i)) continue;
      diff = std::max(diff, sup_norm(ly[i] - ry[i]));
      scale = std::max(scale, ry.pointwise_norm(i));
    }
    if (scale > 0.0) out.relative_error = std::max(out.relative_error, diff / scale);
  }
  return out;
}

StabilityFit stability_bound(const SymbolFunction& u, const VectorFunction& x, const NormSpec& ns,
                             const std::vector<double>& t_grid, double epsilon) {
  StabilityFit fit;
  fit.w_star = integrated_semigroup_check(u).w;
  fit.epsilon = epsilon;
  const double x_norm = norm(x, ns);
  const Trajectory traj = solve_acp(u, x, t_grid);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    const double vn = norm(traj.values[k], ns);
    fit.times.push_back(t);
    fit.norms.push_back(vn);
    if (x_norm > 0.0) fit.fitted_m = std::max(fit.fitted_m, vn / (std::exp((fit.w_star + epsilon) * t) * x_norm));
  }
  return fit;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  out << "t,atom_index,component,re,im\n";
  char buf[128];
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    const VectorFunction& v = trajectory.values[k];
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (int c = 0; c < v.dim(); ++c) {
        std::snprintf(buf, sizeof buf, "%.17g,%zu,%d,%.17g,%.17g\n", trajectory.times[k], i, c, v[i](c).real(),
                      v[i](c).imag());
        out << buf;
      }
    }
  }
}

}  // namespace multop
