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

#include "multop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "multop/errors.hpp"
#include "multop/oracle.hpp"
#include "multop/random.hpp"
#include "multop/semigroup.hpp"

namespace multop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kAtoms = 20;

SpacePtr random_space(Rng& rng, std::size_t atoms, bool nonatomic = false) {
  std::vector<double> coords(atoms), weights(atoms);
  for (std::size_t i = 0; i < atoms; ++i) {
    coords[i] = static_cast<double>(i + 1);
    weights[i] = uniform(rng, 0.05, 1.0);
  }
  return make_space(MeasureSpace::finite(std::move(coords), std::move(weights), nonatomic));
}

SymbolFunction random_symbol(Rng& rng, const SpacePtr& space, int n) {
  std::vector<CMatrix> values(space->size());
  for (CMatrix& m : values) m = random_matrix(rng, n);
  return SymbolFunction::table(space, std::move(values));
}

/// Rescales every block so that the operator norm equals `target`.
SymbolFunction scaled_to(const SymbolFunction& u, double target) {
  const double s = target / operator_norm(u);
  std::vector<CMatrix> values(u.space()->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = s * u.eval_at(i);
  return SymbolFunction::table(u.space(), std::move(values));
}

VectorFunction random_function(Rng& rng, const SpacePtr& space, int n) {
  std::vector<CVector> values(space->size());
  for (CVector& v : values) v = random_vector(rng, n);
  return VectorFunction(space, std::move(values));
}

std::vector<NormSpec> norm_suite() {
  return {NormSpec::lp(1.0), NormSpec::lp(2.0), NormSpec::lp(kInf),
          NormSpec::orlicz(YoungFunction::builtin("tp_log", 2.0)), NormSpec::lorentz(2.0, 1.0)};
}

double analytic_norm(const SymbolFunction& u, bool fault) {
  if (!fault) return operator_norm(u);
  double best = 0.0;
  for (std::size_t i = 0; i < u.space()->size(); ++i)
    if (u.space()->positive(i)) best = std::max(best, u.eval_at(i).cwiseAbs().colwise().sum().maxCoeff());
  return best;
}

CheckResult make(std::string name, double measured, double tol, bool passed, std::string detail = {}) {
  return CheckResult{std::move(name), passed, measured, tol, std::move(detail)};
}

std::string count_detail(const char* what, std::size_t ok, std::size_t total) {
  return std::string(what) + "=" + std::to_string(ok) + "/" + std::to_string(total);
}

}  // namespace

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

CheckResult check_norm_formula(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 1);
  const std::vector<NormSpec> norms = norm_suite();
  double worst_estimate = 0.0;
  double worst_excess = 0.0;  // max ||M_u f|| / (analytic ||f||) - 1
  std::size_t probes = 0;
  for (int s = 0; s < 50; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const SymbolFunction u = random_symbol(rng, space, 1 + s % 3);
    const double analytic = analytic_norm(u, options.inject_norm_fault);
    const DenseOperator d = assemble_dense(u);
    for (const NormSpec& ns : norms) {
      const double estimate = operator_norm_estimate(d, ns, 20, rng());
      worst_estimate = std::max(worst_estimate, std::abs(estimate - analytic));
      for (int k = 0; k < 40; ++k, ++probes) {
        const VectorFunction f = random_function(rng, space, u.dim());
        const double ratio = norm(apply(u, f), ns) / (analytic * norm(f, ns));
        worst_excess = std::max(worst_excess, ratio - 1.0);
      }
    }
  }
  const bool ok = worst_estimate <= 1e-9 && worst_excess <= 1e-9;
  char detail[160];
  std::snprintf(detail, sizeof detail, "symbols=50 norms=5 probes=%zu max_probe_excess=%.3e", probes, worst_excess);
  return make("norm-formula", worst_estimate, 1e-9, ok, detail);
}

CheckResult check_spectrum(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 2);
  double worst = 0.0;
  std::size_t range_equal = 0, scalar = 0;
  for (int s = 0; s < 50; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const int n = 1 + s % 3;
    const SymbolFunction u = random_symbol(rng, space, n);
    const PointSet sigma = spectrum(u);
    const std::vector<Complex> dense = dense_eigenvalues(assemble_dense(u));
    worst = std::max(worst, hausdorff_distance(sigma.points, dense));
    if (n == 1) {
      ++scalar;
      if (essential_range(u).points == sigma.points) ++range_equal;
    }
  }
  return make("spectrum", worst, 1e-8, worst <= 1e-8 && range_equal == scalar,
              count_detail("scalar_range_equal", range_equal, scalar));
}

CheckResult check_inverse(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 3);
  double worst = 0.0;
  std::size_t invertible = 0;
  for (int s = 0; s < 50; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const int n = 1 + s % 3;
    std::vector<CMatrix> values(space->size());
    for (CMatrix& m : values) m = random_matrix(rng, n);
    if (s % 5 == 4) values[s % kAtoms].setZero();
    const SymbolFunction u = SymbolFunction::table(space, std::move(values));
    const InvertibilityResult inv = is_invertible(u);
    if (inv.verdict != Verdict::True) continue;
    ++invertible;
    for (int k = 0; k < 100; ++k) {
      const VectorFunction f = random_function(rng, space, n);
      double scale = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) scale = std::max(scale, f.pointwise_norm(i));
      worst = std::max(worst, max_pointwise_distance(apply(*inv.inverse, apply(u, f)), f) / scale);
      worst = std::max(worst, max_pointwise_distance(apply(u, apply(*inv.inverse, f)), f) / scale);
    }
  }
  const SpacePtr three = make_space(MeasureSpace::finite({1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}));
  CMatrix nil = CMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  const bool nilpotent_rejected = is_invertible(SymbolFunction::constant(three, nil)).verdict == Verdict::False;
  return make("inverse", worst, 1e-9, worst <= 1e-9 && nilpotent_rejected && invertible > 0,
              count_detail("invertible", invertible, 50) +
                  (nilpotent_rejected ? " nilpotent=rejected" : " nilpotent=ACCEPTED"));
}

CheckResult check_closed_range(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 4);
  const std::vector<NormSpec> norms = norm_suite();
  double worst = 0.0;  // max over probes of (delta - 1e-9) - ||uf|| / ||f||
  std::size_t closed = 0, open = 0, witnessed = 0;
  bool ok = true;
  for (int s = 0; s < 40; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    std::vector<CMatrix> values(kAtoms);
    for (std::size_t i = 0; i < kAtoms; ++i)
      values[i] = CMatrix::Constant(1, 1, uniform(rng, 0.0, 1.0) < 0.3 ? Complex(0.0) : random_complex(rng));
    if (s % 2 == 1) values[(s * 7) % kAtoms](0, 0) = 1e-12;
    const SymbolFunction u = SymbolFunction::table(space, std::move(values));
    const ClosedRangeResult cr = has_closed_range(u);
    if (cr.verdict == Verdict::True) {
      ++closed;
      std::vector<bool> mask(kAtoms, false);
      for (std::size_t a : cr.support) mask[a] = true;
      const MeasurableSet support(space, mask);
      for (int k = 0; k < 20; ++k) {
        const VectorFunction f = restrict_to(random_function(rng, space, 1), support);
        for (const NormSpec& ns : norms) {
          const double fn = norm(f, ns);
          if (fn == 0.0) continue;
          worst = std::max(worst, (cr.delta - 1e-9) - norm(apply(u, f), ns) / fn);
        }
      }
    } else if (cr.verdict == Verdict::False) {
      ++open;
      if (!cr.witness) {
        ok = false;
        continue;
      }
      const VectorFunction probe = indicator(MeasurableSet::singleton(space, cr.witness->atom), CVector::Ones(1));
      const double ratio = norm(apply(u, probe), NormSpec::lp(2.0)) / norm(probe, NormSpec::lp(2.0));
      if (ratio < kDefaultTol) ++witnessed;
    } else {
      ok = false;
    }
  }
  ok = ok && worst <= 0.0 && witnessed == open && closed > 0 && open > 0;
  return make("closed-range", std::max(worst, 0.0), 0.0, ok,
              "closed=" + std::to_string(closed) + " " + count_detail("witnessed", witnessed, open));
}

CheckResult check_compactness(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 5);
  const SpacePtr seq = make_space(MeasureSpace::sequence(WeightRule{WeightRule::Kind::Geometric, 1.0, 0.5}, 32));
  const Expression inv_x = Expression::parse("1/x");
  const Expression zero = Expression::constant(0.0);
  const SymbolFunction decaying = SymbolFunction::expressions(seq, 2, {inv_x, zero, zero, inv_x})
                                      .with_envelope(TailEnvelope{inv_x, 0.0, std::nullopt, 0.0});
  const bool decaying_compact = is_compact(decaying).verdict == Verdict::True;
  const bool identity_noncompact = is_compact(SymbolFunction::identity(seq, 2)).verdict == Verdict::False;
  std::size_t finite_compact = 0;
  for (int s = 0; s < 20; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    if (is_compact(random_symbol(rng, space, 1 + s % 3)).verdict == Verdict::True) ++finite_compact;
  }
  const bool ok = decaying_compact && identity_noncompact && finite_compact == 20;
  return make("compactness", ok ? 0.0 : 1.0, 0.0, ok,
              std::string("I/k=") + (decaying_compact ? "compact" : "NONCOMPACT") + " I=" +
                  (identity_noncompact ? "noncompact" : "COMPACT") + " " +
                  count_detail("finite_compact", finite_compact, 20));
}

CheckResult check_fredholm(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 6);
  const std::vector<NormSpec> norms = {NormSpec::lp(1.0), NormSpec::lp(2.0),
                                       NormSpec::orlicz(YoungFunction::builtin("tp_log", 2.0)),
                                       NormSpec::lorentz(2.0, 1.0)};
  std::size_t agree = 0, stable = 0, fredholm = 0;
  for (int s = 0; s < 100; ++s) {
    const SpacePtr space = random_space(rng, kAtoms, true);
    std::vector<CMatrix> values(kAtoms);
    for (CMatrix& m : values) m = CMatrix::Constant(1, 1, random_complex(rng));
    if (s % 3 == 1) values[s % kAtoms](0, 0) = 0.0;
    if (s % 3 == 2) values[s % kAtoms](0, 0) = 1e-12;
    const SymbolFunction u = SymbolFunction::table(space, std::move(values));
    const NormSpec& ns = norms[s % norms.size()];
    const FredholmResult r = is_fredholm(u, ns);
    if (r.invertible == r.lower_bound_everywhere && r.agree) ++agree;
    if (r.verdict == Verdict::True) ++fredholm;
    bool same = r.refine_stable;
    for (int factor : {2, 4}) {
      const SpacePtr fine = make_space(refine(*space, factor));
      if (is_fredholm(u.refined(fine, factor), ns).verdict != r.verdict) same = false;
    }
    if (same) ++stable;
  }
  const bool ok = agree == 100 && stable == 100;
  return make("fredholm", static_cast<double>(100 - std::min(agree, stable)), 0.0, ok,
              count_detail("agree", agree, 100) + " " + count_detail("refine_stable", stable, 100) +
                  " fredholm=" + std::to_string(fredholm));
}

CheckResult check_commutant(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 7);
  double worst = 0.0;
  std::size_t recovered = 0, rejected = 0;
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 10 + static_cast<std::size_t>(s % 11);
    const SpacePtr space = random_space(rng, n);
    CMatrix a = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) a(i, i) = random_complex(rng);
    const CommutantResult r = commutant_recover(a, space);
    if (r.accepted) {
      ++recovered;
      worst = std::max(worst, r.reconstruction_error);
    }
  }
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 10 + static_cast<std::size_t>(s % 11);
    const SpacePtr space = random_space(rng, n);
    const CMatrix a = random_matrix(rng, static_cast<int>(n));
    const CommutantResult r = commutant_recover(a, space);
    if (r.accepted || !r.witness_atom) continue;
    // Recompute the commutator with the witness projection.
    const Eigen::Index j = static_cast<Eigen::Index>(*r.witness_atom);
    CMatrix comm = CMatrix::Zero(a.rows(), a.cols());
    comm.col(j) += a.col(j);
    comm.row(j) -= a.row(j);
    if (sup_induced_norm(comm) > 1e-10) ++rejected;
  }
  const bool ok = recovered == 50 && rejected == 50 && worst <= 1e-10;
  return make("commutant", worst, 1e-10, ok,
              count_detail("diagonal_recovered", recovered, 50) + " " + count_detail("dense_rejected", rejected, 50));
}

CheckResult check_semigroup_law(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 8);
  bool identity_exact = true;
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const SymbolFunction u = random_symbol(rng, space, 1 + s % 3);
    const SymbolFunction t0 = semigroup_at(u, 0.0);
    for (std::size_t i = 0; i < kAtoms; ++i)
      if (t0.eval_at(i) != CMatrix::Identity(u.dim(), u.dim())) identity_exact = false;
    for (int k = 0; k < 10; ++k) {
      const double a = uniform(rng, 0.0, 1.0), b = uniform(rng, 0.0, 1.0);
      const SymbolFunction ts = semigroup_at(u, a), tt = semigroup_at(u, b), tst = semigroup_at(u, a + b);
      for (std::size_t i = 0; i < kAtoms; ++i)
        worst = std::max(worst, (tst.eval_at(i) - ts.eval_at(i) * tt.eval_at(i)).cwiseAbs().maxCoeff());
    }
  }
  std::size_t generated = 0;
  for (int s = 0; s < 20; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const SymbolFunction u = scaled_to(random_symbol(rng, space, 1 + s % 3), uniform(rng, 0.5, 10.0));
    if (generation_check(u).generates_c0) ++generated;
  }
  const bool ok = identity_exact && worst <= 1e-9 && generated == 20;
  return make("semigroup-law", worst, 1e-9, ok,
              std::string(identity_exact ? "T(0)=I" : "T(0)!=I") + " pairs=100 " +
                  count_detail("generates", generated, 20));
}

CheckResult check_acp_solution(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 9);
  double worst = 0.0;
  double ratio_lo = kInf, ratio_hi = 0.0;
  for (int s = 0; s < 20; ++s) {
    const SpacePtr space = random_space(rng, 8);
    const SymbolFunction u = random_symbol(rng, space, 1 + s % 3);
    const VectorFunction x = random_function(rng, space, u.dim());
    const VectorFunction exact = solve_acp(u, x, {0.0, 1.0}).values.back();
    worst = std::max(worst, max_pointwise_distance(rk4_oracle(u, x, 1.0, 1e-3), exact));
    const double coarse = max_pointwise_distance(rk4_oracle(u, x, 1.0, 0.1), exact);
    const double fine = max_pointwise_distance(rk4_oracle(u, x, 1.0, 0.05), exact);
    ratio_lo = std::min(ratio_lo, coarse / fine);
    ratio_hi = std::max(ratio_hi, coarse / fine);
  }
  const bool ok = worst <= 1e-6 && ratio_lo >= 12.0 && ratio_hi <= 20.0;
  char detail[120];
  std::snprintf(detail, sizeof detail, "symbols=20 h_halving_ratio=[%.3f,%.3f]", ratio_lo, ratio_hi);
  return make("acp-solution", worst, 1e-6, ok, detail);
}

CheckResult check_spectral_mapping(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 10);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const SymbolFunction u = random_symbol(rng, space, 1 + s % 3);
    for (double t : {0.5, 1.0, 2.0}) worst = std::max(worst, spectral_mapping_check(u, t));
  }
  return make("spectral-mapping", worst, 1e-8, worst <= 1e-8, "symbols=20 t={0.5,1,2}");
}

CheckResult check_integrated_semigroup(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 11);
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    const SpacePtr space = random_space(rng, 4);
    const int n = 1 + s % 3;
    const SymbolFunction u = scaled_to(random_symbol(rng, space, n), uniform(rng, 0.2, 1.0));
    const double w = integrated_semigroup_check(u).w;
    for (int m : {1, 2, default_integration_degree(n)})
      worst = std::max(worst, laplace_identity_check(u, Complex(w + 3.0, 0.0), m).relative_error);
  }
  std::size_t agree = 0;
  for (int s = 0; s < 50; ++s) {
    const SpacePtr space = random_space(rng, kAtoms);
    const SymbolFunction u = random_symbol(rng, space, 1 + s % 3);
    if (integrated_semigroup_check(u).agree) ++agree;
  }
  return make("integrated-semigroup", worst, 1e-4, worst <= 1e-4 && agree == 50,
              "symbols=10 m={1,2,2N+1} " + count_detail("generator_half_plane_agree", agree, 50));
}

CheckResult check_function_space_axioms(const SuiteOptions& options) {
  Rng rng = stream_rng(options.seed, 12);
  std::size_t violations = 0;
  const SpacePtr space = random_space(rng, kAtoms);
  for (const NormSpec& ns : norm_suite()) {
    const AxiomReport r = verify_axioms(ns, space, 200, rng());
    violations += r.monotonicity_violations + r.fatou_violations + r.local_integrability_violations;
  }

  // Halving sets E_n = {k >= n} on atoms of weight 2^-k.
  std::vector<double> coords, weights;
  for (int k = 1; k <= 80; ++k) {
    coords.push_back(k);
    weights.push_back(std::ldexp(1.0, -k));
  }
  const SpacePtr dyadic = make_space(MeasureSpace::finite(coords, weights));
  std::vector<MeasurableSet> sets;
  for (std::size_t n = 0; n < 80; ++n)
    sets.push_back(MeasurableSet::where(dyadic, [n](std::size_t i) { return i >= n; }));
  const VectorFunction one(dyadic, std::vector<CVector>(80, CVector::Ones(1)));
  const bool l1 = absolute_continuity_check(one, sets, NormSpec::lp(1.0)).absolutely_continuous;
  const bool l2 = absolute_continuity_check(one, sets, NormSpec::lp(2.0)).absolutely_continuous;
  const bool linf = absolute_continuity_check(one, sets, NormSpec::lp(kInf)).absolutely_continuous;
  const bool ok = violations == 0 && l1 && l2 && !linf;
  return make("function-space-axioms", static_cast<double>(violations), 0.0, ok,
              std::string("norms=5 samples=200 ac(L1)=") + (l1 ? "true" : "false") +
                  " ac(L2)=" + (l2 ? "true" : "false") + " ac(Linf)=" + (linf ? "true" : "false"));
}

std::vector<CheckResult> run_builtin_suite(const SuiteOptions& options) {
  return {check_norm_formula(options),       check_spectrum(options),
          check_inverse(options),            check_closed_range(options),
          check_compactness(options),        check_fredholm(options),
          check_commutant(options),          check_semigroup_law(options),
          check_acp_solution(options),       check_spectral_mapping(options),
          check_integrated_semigroup(options), check_function_space_axioms(options)};
}

std::vector<CheckResult> run_config_suite(const ProblemConfig& config, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const SymbolFunction& u = config.symbol;
  const MeasureSpace& space = *config.space;
  Rng rng = stream_rng(options.seed, 100);

  if (space.is_finite()) {
    const double analytic = analytic_norm(u, options.inject_norm_fault);
    const DenseOperator d = assemble_dense(u);
    const double estimate = operator_norm_estimate(d, config.norm, config.task.trials, rng());
    out.push_back(make("norm-formula", std::abs(estimate - analytic), 1e-9,
                       std::abs(estimate - analytic) <= 1e-9, "norm=" + config.norm.describe()));
    if (d.dimension() <= kMaxDenseDim) {
      const double h = hausdorff_distance(spectrum(u).points, dense_eigenvalues(d));
      out.push_back(make("spectrum", h, 1e-8, h <= 1e-8));
    }
  }

  const InvertibilityResult inv = is_invertible(u, config.task.tol);
  if (inv.verdict == Verdict::True) {
    double worst = 0.0;
    for (std::size_t k = 0; k < config.task.trials; ++k) {
      const VectorFunction f = random_function(rng, config.space, u.dim());
      double scale = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) scale = std::max(scale, f.pointwise_norm(i));
      worst = std::max(worst, max_pointwise_distance(apply(*inv.inverse, apply(u, f)), f) / scale);
    }
    out.push_back(make("inverse", worst, 1e-9, worst <= 1e-9));
  }

  if (u.dim() == 1 && space.is_finite() && space.nonatomic() && config.norm.absolutely_continuous()) {
    const FredholmResult r = is_fredholm(u, config.norm, config.task.tol);
    out.push_back(make("fredholm", r.agree && r.refine_stable ? 0.0 : 1.0, 0.0, r.agree && r.refine_stable));
  }

  const double norm_u = operator_norm(u);
  if (space.is_finite() && std::isfinite(norm_u)) {
    double law = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double a = uniform(rng, 0.0, 1.0), b = uniform(rng, 0.0, 1.0);
      const SymbolFunction ts = semigroup_at(u, a), tt = semigroup_at(u, b), tst = semigroup_at(u, a + b);
      for (std::size_t i = 0; i < space.size(); ++i) {
        if (!space.positive(i)) continue;
        const CMatrix lhs = tst.eval_at(i);
        law = std::max(law, (lhs - ts.eval_at(i) * tt.eval_at(i)).cwiseAbs().maxCoeff() /
                                std::max(1.0, lhs.cwiseAbs().maxCoeff()));
      }
    }
    out.push_back(make("semigroup-law", law, 1e-9, law <= 1e-9));

    double mapping = 0.0;
    for (double t : {0.5, 1.0, 2.0}) mapping = std::max(mapping, spectral_mapping_check(u, t));
    out.push_back(make("spectral-mapping", mapping, 1e-8, mapping <= 1e-8));

    const IntegratedCheck ic = integrated_semigroup_check(u);
    const int m = config.task.m.value_or(default_integration_degree(u.dim()));
    const Complex lambda = config.task.lambda.value_or(Complex(ic.w + 3.0, 0.0));
    const double err = laplace_identity_check(u, lambda, m, config.task.t_max).relative_error;
    out.push_back(make("integrated-semigroup", err, 1e-4, err <= 1e-4 && ic.agree));
  }

  if (space.is_finite()) {
    const AxiomReport r = verify_axioms(config.norm, config.space, 100, rng(), u.dim());
    const double v = static_cast<double>(r.monotonicity_violations + r.fatou_violations +
                                         r.local_integrability_violations);
    out.push_back(make("function-space-axioms", v, 0.0, r.passed(), "norm=" + config.norm.describe()));
  }
  return out;
}

void write_results(const std::vector<CheckResult>& results, std::ostream& out) {
  char buf[96];
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    if (r.passed) ++passed;
    std::snprintf(buf, sizeof buf, " measured=%.3e tol=%.1e", r.measured, r.tolerance);
    out << (r.passed ? "PASS " : "FAIL ") << r.name << buf;
    if (!r.detail.empty()) out << ' ' << r.detail;
    out << '\n';
  }
  out << passed << '/' << results.size() << " checks passed\n";
}

}  // namespace multop
