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

#include "multop/multiplication_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "multop/errors.hpp"
#include "multop/random.hpp"

namespace multop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// What is known about the atoms beyond the truncation of a sequence space.
struct TailInfo {
  bool exact = false;           // constant body: the tail repeats u
  double norm_sup = 0.0;        // sup_{k > K} ||u(a_k)||
  double norm_limit = 0.0;      // lim_k of the norm envelope
  double spectral_sup = 0.0;    // sup_{k > K} s(u(a_k))
};

TailInfo tail_info(const SymbolFunction& u) {
  TailInfo t;
  if (const auto* c = std::get_if<SymbolFunction::Constant>(&u.body())) {
    t.exact = true;
    t.norm_sup = t.norm_limit = sup_induced_norm(c->value);
    t.spectral_sup = spectral_bound(c->value);
    return t;
  }
  validate_envelope(u);
  const TailEnvelope& env = *u.envelope();
  t.norm_sup = envelope_tail_sup(env.norm_bound, env.norm_limit, *u.space());
  t.norm_limit = env.norm_limit;
  // s(A) <= spectral radius <= ||A|| when no sharper bound is declared.
  t.spectral_sup = env.spectral_bound
                       ? envelope_tail_sup(*env.spectral_bound, env.spectral_limit, *u.space())
                       : t.norm_sup;
  return t;
}

PointSet with_tail(std::vector<Complex> points, const SymbolFunction& u) {
  PointSet ps;
  ps.points = unique_points(std::move(points));
  if (u.space()->is_finite()) return ps;
  const TailInfo tail = tail_info(u);
  if (tail.exact) {
    ps.tail = PointSet::Tail::Exact;
  } else if (!std::isfinite(tail.norm_sup)) {
    ps.tail = PointSet::Tail::Unbounded;
    ps.tail_radius = kInf;
  } else {
    ps.tail = PointSet::Tail::Disk;
    ps.tail_radius = tail.norm_sup;
    if (tail.norm_limit == 0.0) ps.limit_points.push_back(Complex(0.0));
  }
  return ps;
}

std::vector<VectorFunction> probe_functions(const SpacePtr& space, int dim) {
  Rng rng(0);
  std::vector<VectorFunction> probes;
  probes.emplace_back(space, std::vector<CVector>(space->size(), CVector::Ones(dim)));
  for (int k = 0; k < 4; ++k) {
    std::vector<CVector> values(space->size());
    for (CVector& v : values) v = random_vector(rng, dim);
    probes.emplace_back(space, std::move(values));
  }
  return probes;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::NotApplicable:
      return "not-applicable";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

const char* to_string(PointSet::Tail t) {
  switch (t) {
    case PointSet::Tail::None:
      return "none";
    case PointSet::Tail::Exact:
      return "exact";
    case PointSet::Tail::Disk:
      return "disk";
    case PointSet::Tail::Unbounded:
      return "unbounded";
  }
  return "?";
}

std::vector<Complex> PointSet::closure() const {
  std::vector<Complex> all = points;
  all.insert(all.end(), limit_points.begin(), limit_points.end());
  return unique_points(std::move(all));
}

VectorFunction apply(const SymbolFunction& u, const VectorFunction& f) {
  if (u.space() != f.space() && u.space()->size() != f.size())
    throw DomainError("apply: symbol and function live on different spaces");
  if (u.dim() != f.dim()) throw DomainError("apply: dimension mismatch");
  VectorFunction g(f.space(), f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    try {
      g[i] = u.eval_at(i) * f[i];
    } catch (const NonFiniteSymbolError&) {
      if (f.space()->positive(i)) throw;
    }
  }
  return g;
}

double operator_norm(const SymbolFunction& u) {
  const MeasureSpace& space = *u.space();
  double m = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) continue;
    try {
      m = std::max(m, sup_induced_norm(u.eval_at(i)));
    } catch (const NonFiniteSymbolError&) {
      return kInf;
    }
  }
  if (!space.is_finite()) m = std::max(m, tail_info(u).norm_sup);
  return m;
}

double operator_norm_least_bound(const SymbolFunction& u) {
  const SpacePtr& space = u.space();
  std::vector<double> norms(space->size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    try {
      norms[i] = sup_induced_norm(u.eval_at(i));
    } catch (const NonFiniteSymbolError&) {
      norms[i] = kInf;
    }
  }
  std::vector<double> candidates = {0.0};
  for (double v : norms)
    if (std::isfinite(v)) candidates.push_back(v);
  candidates.push_back(kInf);
  std::sort(candidates.begin(), candidates.end());
  double least = kInf;
  for (double level : candidates) {
    const MeasurableSet above = MeasurableSet::where(space, [&](std::size_t i) { return norms[i] > level; });
    if (measure_of(above) == 0.0) {
      least = level;
      break;
    }
  }
  if (!space->is_finite()) least = std::max(least, tail_info(u).norm_sup);
  return least;
}

PointSet essential_range(const SymbolFunction& u) {
  if (u.dim() != 1) throw DomainError("essential range is defined for N = 1; use spectrum");
  std::vector<Complex> values;
  for (std::size_t i = 0; i < u.space()->size(); ++i)
    if (u.space()->positive(i)) values.push_back(u.eval_at(i)(0, 0));
  return with_tail(std::move(values), u);
}

PointSet spectrum(const SymbolFunction& u) {
  std::vector<Complex> values;
  for (std::size_t i = 0; i < u.space()->size(); ++i) {
    if (!u.space()->positive(i)) continue;
    const EigenSet eig = eigenvalues(u.eval_at(i));
    values.insert(values.end(), eig.values.begin(), eig.values.end());
  }
  return with_tail(std::move(values), u);
}

InvertibilityResult is_invertible(const SymbolFunction& u, double tol) {
  InvertibilityResult out;
  const MeasureSpace& space = *u.space();
  const PointSet sigma = spectrum(u);
  out.delta = kInf;
  for (const Complex& l : sigma.closure()) out.delta = std::min(out.delta, std::abs(l));

  if (!sigma.bounded() || !std::isfinite(operator_norm(u))) {
    out.verdict = Verdict::False;
  } else if (sigma.tail == PointSet::Tail::Disk && sigma.limit_points.empty()) {
    // The envelope bounds the tail from above only; eigenvalues there may
    // still approach zero.
    out.verdict = out.delta >= tol ? Verdict::Undetermined : Verdict::False;
  } else {
    out.verdict = verdict_of(out.delta >= tol);
  }
  if (out.verdict != Verdict::True) return out;

  std::vector<CMatrix> r(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    try {
      r[i] = inverse(u.eval_at(i));
    } catch (const SingularMatrixError&) {
      r[i] = CMatrix::Zero(u.dim(), u.dim());
    } catch (const NonFiniteSymbolError&) {
      r[i] = CMatrix::Zero(u.dim(), u.dim());
    }
  }
  out.inverse = SymbolFunction::table(u.space(), std::move(r));
  for (const VectorFunction& f : probe_functions(u.space(), u.dim())) {
    const VectorFunction back = apply(*out.inverse, apply(u, f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!space.positive(i)) continue;
      const double scale = std::max(f.pointwise_norm(i), 1e-300);
      out.probe_residual = std::max(out.probe_residual, sup_norm(back[i] - f[i]) / scale);
    }
  }
  return out;
}

ClosedRangeResult has_closed_range(const SymbolFunction& u, double tol) {
  if (u.dim() != 1) throw DomainError("closed range analysis is implemented for N = 1");
  ClosedRangeResult out;
  const MeasureSpace& space = *u.space();
  out.delta = kInf;
  std::optional<std::size_t> argmin;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) continue;
    const double m = std::abs(u.eval_at(i)(0, 0));
    if (m == 0.0) continue;
    out.support.push_back(i);
    if (m < out.delta) {
      out.delta = m;
      argmin = i;
    }
  }
  auto finish = [&]() {
    out.verdict = verdict_of(out.delta >= tol);
    if (out.verdict == Verdict::False && argmin) out.witness = Witness{*argmin, out.delta};
    return out;
  };
  if (space.is_finite()) return finish();

  const TailInfo tail = tail_info(u);
  if (tail.exact) {
    if (tail.norm_sup > 0.0) out.delta = std::min(out.delta, tail.norm_sup);
    return finish();
  }
  if (tail.norm_sup == 0.0) return finish();  // the tail is identically zero
  if (tail.norm_limit == 0.0) {
    // Non-zero tail values tend to zero, so inf_S |u| = 0.
    out.delta = 0.0;
    out.verdict = Verdict::False;
    if (u.evaluable_at(space.size())) {
      for (std::size_t atom : tail_sample_atoms(space, 0x1p62)) {
        const double m = std::abs(u.eval_at(atom)(0, 0));
        if (m > 0.0 && m < tol) {
          out.witness = Witness{atom, m};
          break;
        }
      }
    }
    return out;
  }
  finish();
  if (out.verdict == Verdict::True) out.verdict = Verdict::Undetermined;
  return out;
}

CompactnessResult is_compact(const SymbolFunction& u, const std::vector<double>& eps_grid) {
  CompactnessResult out;
  const MeasureSpace& space = *u.space();
  std::vector<double> norms;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.positive(i)) norms.push_back(sup_induced_norm(u.eval_at(i)));
  auto count_at_least = [&](double eps) {
    return static_cast<double>(std::count_if(norms.begin(), norms.end(), [&](double v) { return v >= eps; }));
  };

  if (space.is_finite()) {
    for (double eps : eps_grid) out.levels.push_back({eps, true, count_at_least(eps)});
    out.verdict = Verdict::True;
    out.note = "finite-dimensional space: every level set is finite";
    return out;
  }

  const TailInfo tail = tail_info(u);
  bool all_finite_levels = true;
  for (double eps : eps_grid) {
    LevelSet level{eps, true, count_at_least(eps)};
    if (tail.norm_limit >= eps) {
      level.finite = false;
      level.size_bound = kInf;
      all_finite_levels = false;
    } else if (!tail.exact) {
      // First coordinate k beyond the truncation with envelope(k) < eps.
      const TailEnvelope& env = *u.envelope();
      auto below = [&](double k) { return env.norm_bound.evaluate(k).real() < eps; };
      const double first = static_cast<double>(space.size() + 1);
      double first_below = first;
      if (!below(first)) {
        double lo = first;
        double hi = 2.0 * first;
        while (!below(hi) && hi < 1e15) {
          lo = hi;
          hi *= 2.0;
        }
        if (below(hi)) {
          while (hi - lo > 1.0) {
            const double mid = std::floor(0.5 * (lo + hi));
            if (below(mid)) {
              hi = mid;
            } else {
              lo = mid;
            }
          }
          first_below = hi;
        } else {
          first_below = kInf;
        }
      }
      level.size_bound += first_below - first;
    }
    out.levels.push_back(level);
  }
  out.verdict = verdict_of(all_finite_levels && tail.norm_limit == 0.0);
  out.note = out.verdict == Verdict::True ? "tail envelope tends to zero"
                                          : "a level set is infinite or the envelope does not vanish";
  return out;
}

FredholmResult is_fredholm(const SymbolFunction& u, const NormSpec& ns, double tol) {
  if (u.dim() != 1) throw DomainError("Fredholm analysis is implemented for N = 1");
  if (!u.space()->is_finite()) throw DomainError("Fredholm analysis needs a finite space");
  if (!u.space()->nonatomic()) throw DomainError("Fredholm analysis needs a nonatomic-flagged space");
  if (!ns.absolutely_continuous())
    throw DomainError("Fredholm analysis needs a norm with absolutely continuous norm, got " + ns.describe());

  FredholmResult out;
  const MeasureSpace& space = *u.space();
  out.invertible = is_invertible(u, tol).verdict == Verdict::True;

  out.min_modulus = kInf;
  std::size_t positive_atoms = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!space.positive(i)) continue;
    ++positive_atoms;
    out.min_modulus = std::min(out.min_modulus, std::abs(u.eval_at(i)(0, 0)));
  }
  out.lower_bound_everywhere = out.min_modulus >= tol;

  const ClosedRangeResult cr = has_closed_range(u, tol);
  out.closed_range_full_support = cr.verdict == Verdict::True && cr.support.size() == positive_atoms;

  out.agree = out.invertible == out.lower_bound_everywhere &&
              out.invertible == out.closed_range_full_support;
  out.verdict = verdict_of(out.invertible);

  out.refine_stable = true;
  for (int factor : {2, 4}) {
    const SpacePtr fine = make_space(refine(space, factor));
    const bool v = is_invertible(u.refined(fine, factor), tol).verdict == Verdict::True;
    if (v != out.invertible) out.refine_stable = false;
  }
  return out;
}

CommutantResult commutant_recover(const CMatrix& a, const SpacePtr& space, double tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(space->size());
  if (a.rows() != n || a.cols() != n) throw DomainError("commutant recovery: operator size differs from atom count");
  CommutantResult out;
  for (Eigen::Index j = 0; j < n; ++j) {
    // A P_j - P_j A, with P_j = M_{1_{x_j}}.
    CMatrix comm = CMatrix::Zero(n, n);
    comm.col(j) += a.col(j);
    comm.row(j) -= a.row(j);
    const double c = sup_induced_norm(comm);
    out.commutator_norm = std::max(out.commutator_norm, c);
    if (c > tol && !out.witness_atom) out.witness_atom = static_cast<std::size_t>(j);
  }
  if (out.witness_atom) return out;

  const CVector v = a * CVector::Ones(n);
  std::vector<CMatrix> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = CMatrix::Constant(1, 1, v(i));
  CMatrix mv = CMatrix::Zero(n, n);
  mv.diagonal() = v;
  out.reconstruction_error = sup_induced_norm(a - mv);
  out.bounded = v.cwiseAbs().maxCoeff() <= sup_induced_norm(a) + tol;
  out.accepted = out.reconstruction_error <= tol && out.bounded;
  if (out.accepted) out.symbol = SymbolFunction::table(space, std::move(values));
  return out;
}

OperatorReport analyze(const SymbolFunction& u, const NormSpec& ns, const AnalyzeOptions& options) {
  OperatorReport r;
  r.dim = u.dim();
  r.operator_norm = operator_norm(u);
  r.operator_norm_least_bound = operator_norm_least_bound(u);
  r.spectrum = spectrum(u);
  r.bounded = verdict_of(std::isfinite(r.operator_norm));
  if (r.dim == 1) r.essential_range = essential_range(u);

  const InvertibilityResult inv = is_invertible(u, options.tol);
  r.invertible = inv.verdict;
  r.delta_invertibility = inv.delta;

  if (r.dim == 1) {
    const ClosedRangeResult cr = has_closed_range(u, options.tol);
    r.closed_range = cr.verdict;
    r.delta_closed_range = cr.delta;
  } else {
    r.notes.push_back("closed range: analysis implemented for N = 1 only");
  }

  r.compactness = is_compact(u, options.eps_grid);
  r.compact = r.compactness.verdict;

  try {
    r.fredholm_detail = is_fredholm(u, ns, options.tol);
    r.fredholm = r.fredholm_detail->verdict;
  } catch (const DomainError& e) {
    r.fredholm = Verdict::NotApplicable;
    r.notes.push_back(std::string("fredholm: ") + e.what());
  }
  if (!r.spectrum.bounded()) r.notes.push_back("resolvent set undetermined: the tail is unbounded");
  return r;
}

}  // namespace multop
