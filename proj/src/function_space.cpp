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

#include "multop/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "multop/errors.hpp"
#include "multop/random.hpp"

namespace multop {

VectorFunction::VectorFunction(SpacePtr space, int dim)
    : space_(std::move(space)), dim_(dim) {
  if (!space_) throw DomainError("vector function needs a space");
  values_.assign(space_->size(), CVector::Zero(dim));
}

VectorFunction::VectorFunction(SpacePtr space, std::vector<CVector> values)
    : space_(std::move(space)), dim_(values.empty() ? 1 : static_cast<int>(values.front().size())),
      values_(std::move(values)) {
  if (!space_) throw DomainError("vector function needs a space");
  if (values_.size() != space_->size()) throw DomainError("vector function length differs from atom count");
  for (const CVector& v : values_) {
    if (v.size() != dim_) throw DomainError("vector function values differ in dimension");
    if (!all_finite(v)) throw NumericError("vector function has non-finite values");
  }
}

VectorFunction& VectorFunction::operator+=(const VectorFunction& other) {
  if (other.size() != size() || other.dim() != dim()) throw DomainError("vector function shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

VectorFunction& VectorFunction::operator-=(const VectorFunction& other) {
  if (other.size() != size() || other.dim() != dim()) throw DomainError("vector function shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

VectorFunction& VectorFunction::operator*=(Complex scale) {
  for (CVector& v : values_) v *= scale;
  return *this;
}

VectorFunction operator+(VectorFunction a, const VectorFunction& b) { return a += b; }
VectorFunction operator-(VectorFunction a, const VectorFunction& b) { return a -= b; }
VectorFunction operator*(Complex s, VectorFunction a) { return a *= s; }

VectorFunction indicator(const MeasurableSet& set, const CVector& z) {
  VectorFunction f(set.space(), static_cast<int>(z.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (set.contains(i)) f[i] = z;
  return f;
}

VectorFunction restrict_to(const VectorFunction& f, const MeasurableSet& set) {
  VectorFunction g = f;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!set.contains(i)) g[i].setZero();
  return g;
}

double max_pointwise_distance(const VectorFunction& f, const VectorFunction& g) {
  double d = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) d = std::max(d, sup_norm(f[i] - g[i]));
  return d;
}

// ---------------------------------------------------------------------------
// Young functions and norm specs

YoungFunction YoungFunction::builtin(const std::string& id, double p) {
  YoungFunction y;
  y.id_ = id;
  y.p_ = p;
  if (id == "tp") {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ConfigError("orlicz 'tp' needs finite p >= 1");
    y.phi_ = [p](double t) { return std::pow(t, p); };
  } else if (id == "tp_log") {
    if (!(p >= 1.0) || !std::isfinite(p)) throw ConfigError("orlicz 'tp_log' needs finite p >= 1");
    y.phi_ = [p](double t) { return std::pow(t, p) * std::log1p(t); };
  } else if (id == "quad_rational") {
    y.p_ = 2.0;
    y.phi_ = [](double t) { return t * t / (1.0 + t) + t * t; };
  } else {
    throw ConfigError("unknown Young function '" + id + "'");
  }
  return y;
}

YoungFunction YoungFunction::custom(std::string id, std::function<double(double)> phi) {
  YoungFunction y;
  y.id_ = std::move(id);
  y.phi_ = std::move(phi);
  return y;
}

bool YoungFunction::shape_ok(double upper, int points) const {
  if (phi_(0.0) != 0.0) return false;
  const double h = upper / (points - 1);
  double prev2 = phi_(0.0);
  double prev1 = phi_(h);
  if (prev1 < prev2) return false;
  for (int k = 2; k < points; ++k) {
    const double cur = phi_(k * h);
    const double scale = 1e-12 * (1.0 + std::abs(cur));
    if (cur < prev1 - scale) return false;
    if (cur - 2.0 * prev1 + prev2 < -scale) return false;
    prev2 = prev1;
    prev1 = cur;
  }
  return true;
}

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0)) throw ConfigError("L^p norm needs p >= 1");
  NormSpec ns;
  ns.family_ = Family::Lp;
  ns.p_ = p;
  return ns;
}

NormSpec NormSpec::orlicz(YoungFunction phi) {
  if (!phi.shape_ok()) throw ConfigError("Young function '" + phi.id() + "' is not convex and increasing with Phi(0) = 0");
  return orlicz_unchecked(std::move(phi));
}

NormSpec NormSpec::orlicz_unchecked(YoungFunction phi) {
  NormSpec ns;
  ns.family_ = Family::Orlicz;
  ns.p_ = phi.p();
  ns.phi_ = std::move(phi);
  return ns;
}

NormSpec NormSpec::lorentz(double p, double q) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("Lorentz norm needs finite p > 0");
  if (!(q > 0.0)) throw ConfigError("Lorentz norm needs q > 0");
  NormSpec ns;
  ns.family_ = Family::Lorentz;
  ns.p_ = p;
  ns.q_ = q;
  return ns;
}

bool NormSpec::absolutely_continuous() const {
  switch (family_) {
    case Family::Lp:
      return std::isfinite(p_);
    case Family::Orlicz:
      return phi_->id() == "tp" || phi_->id() == "tp_log" || phi_->id() == "quad_rational";
    case Family::Lorentz:
      return std::isfinite(q_);
  }
  return false;
}

namespace {

std::string fmt_param(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string NormSpec::describe() const {
  switch (family_) {
    case Family::Lp:
      return "L^" + fmt_param(p_);
    case Family::Orlicz:
      return "Orlicz(" + phi_->id() + (phi_->p() > 0.0 ? ", p=" + fmt_param(phi_->p()) : "") + ")";
    case Family::Lorentz:
      return "Lorentz(" + fmt_param(p_) + ", " + fmt_param(q_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Norms

namespace {

struct Profile {
  std::vector<double> values;   // ||f(x_i)||_sup at positive-weight atoms
  std::vector<double> weights;
  double max = 0.0;
};

Profile profile(const VectorFunction& f) {
  Profile pr;
  const MeasureSpace& space = *f.space();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double w = space.weights()[i];
    if (!(w > 0.0)) continue;
    const double a = f.pointwise_norm(i);
    pr.values.push_back(a);
    pr.weights.push_back(w);
    pr.max = std::max(pr.max, a);
  }
  return pr;
}

double lp_norm(const Profile& pr, double p) {
  if (pr.max == 0.0) return 0.0;
  if (std::isinf(p)) return pr.max;
  double sum = 0.0;
  for (std::size_t i = 0; i < pr.values.size(); ++i)
    sum += pr.weights[i] * std::pow(pr.values[i] / pr.max, p);
  return pr.max * std::pow(sum, 1.0 / p);
}

double young_level(const Profile& pr, const YoungFunction& phi, double k) {
  double s = 0.0;
  for (std::size_t i = 0; i < pr.values.size(); ++i) s += pr.weights[i] * phi(pr.values[i] / k);
  return s;
}

LuxemburgResult luxemburg_profile(const Profile& pr, const YoungFunction& phi) {
  if (pr.max == 0.0) return {0.0, 0.0};
  // Bracket [lo, hi] with level(lo) > 1 >= level(hi), starting from max |f|.
  double lo = pr.max;
  double hi = pr.max;
  constexpr int kMaxDoublings = 2100;
  if (young_level(pr, phi, hi) <= 1.0) {
    int n = 0;
    do {
      hi = lo;
      lo *= 0.5;
    } while (young_level(pr, phi, lo) <= 1.0 && ++n < kMaxDoublings && lo > 0.0);
  } else {
    int n = 0;
    do {
      lo = hi;
      hi *= 2.0;
    } while (young_level(pr, phi, hi) > 1.0 && ++n < kMaxDoublings && std::isfinite(hi));
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (young_level(pr, phi, mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, young_level(pr, phi, hi)};
}

}  // namespace

LuxemburgResult luxemburg(const VectorFunction& f, const YoungFunction& phi) {
  return luxemburg_profile(profile(f), phi);
}

std::vector<Step> decreasing_rearrangement(const VectorFunction& f) {
  if (!f.space()->is_finite()) throw DomainError("decreasing rearrangement: sequence mode is not supported");
  const Profile pr = profile(f);
  std::vector<std::size_t> order(pr.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pr.values[a] > pr.values[b]; });
  std::vector<Step> steps;
  for (std::size_t idx : order) {
    if (!steps.empty() && steps.back().value == pr.values[idx]) {
      steps.back().width += pr.weights[idx];
    } else {
      steps.push_back({pr.values[idx], pr.weights[idx]});
    }
  }
  return steps;
}

double lorentz_norm_of_steps(const std::vector<Step>& steps, double p, double q) {
  double vmax = 0.0;
  for (const Step& s : steps) vmax = std::max(vmax, s.value);
  if (vmax == 0.0) return 0.0;
  double t_prev = 0.0;
  if (std::isinf(q)) {
    double best = 0.0;
    for (const Step& s : steps) {
      const double t = t_prev + s.width;
      best = std::max(best, s.value * std::pow(t, 1.0 / p));
      t_prev = t;
    }
    return best;
  }
  // int_{T_{j-1}}^{T_j} t^{q/p - 1} dt = (p/q) (T_j^{q/p} - T_{j-1}^{q/p})
  const double r = q / p;
  double sum = 0.0;
  for (const Step& s : steps) {
    const double t = t_prev + s.width;
    const double piece = r == 1.0 ? s.width : (std::pow(t, r) - std::pow(t_prev, r)) / r;
    sum += std::pow(s.value / vmax, q) * piece;
    t_prev = t;
  }
  return vmax * std::pow(sum, 1.0 / q);
}

double norm(const VectorFunction& f, const NormSpec& ns) {
  switch (ns.family()) {
    case NormSpec::Family::Lp:
      return lp_norm(profile(f), ns.p());
    case NormSpec::Family::Orlicz:
      return luxemburg_profile(profile(f), ns.phi()).norm;
    case NormSpec::Family::Lorentz:
      return lorentz_norm_of_steps(decreasing_rearrangement(f), ns.p(), ns.q());
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

VectorFunction random_function(const SpacePtr& space, int dim, Rng& rng) {
  std::vector<CVector> values(space->size());
  for (CVector& v : values) v = random_vector(rng, dim) * uniform(rng, 0.0, 2.0);
  return VectorFunction(space, std::move(values));
}

double local_integral(const VectorFunction& f, const MeasurableSet& set) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (set.contains(i)) s += f.space()->weights()[i] * f.pointwise_norm(i);
  return s;
}

}  // namespace

AxiomReport verify_axioms(const NormSpec& ns, const SpacePtr& space, std::size_t sample_count,
                          std::uint64_t seed, int dim) {
  AxiomReport report;
  report.samples = sample_count;
  Rng rng(seed);
  const std::size_t n = space->size();

  // (i) ||f(x)|| <= ||g(x)|| a.e. implies ||f|| <= ||g||.
  for (std::size_t s = 0; s < sample_count; ++s) {
    const VectorFunction g = random_function(space, dim, rng);
    VectorFunction f(space, dim);
    for (std::size_t i = 0; i < n; ++i) {
      CVector v = random_vector(rng, dim);
      const double vn = sup_norm(v);
      if (vn > 0.0) v *= uniform(rng, 0.0, 1.0) * g.pointwise_norm(i) / vn;
      f[i] = v;
    }
    const double nf = norm(f, ns);
    const double ng = norm(g, ns);
    if (nf > ng * (1.0 + 1e-12) + 1e-300) ++report.monotonicity_violations;
  }

  // (ii) 0 <= f_n increasing to f implies ||f_n|| increasing to ||f||.
  constexpr int kLevels = 16;
  for (std::size_t s = 0; s < sample_count; ++s) {
    std::vector<CVector> vals(n);
    double fmax = 0.0;
    for (CVector& v : vals) {
      v.resize(dim);
      for (int j = 0; j < dim; ++j) {
        v(j) = uniform(rng, 0.0, 2.0);
        fmax = std::max(fmax, v(j).real());
      }
    }
    const VectorFunction f(space, vals);
    const double target = norm(f, ns);
    double prev = 0.0;
    bool ok = true;
    for (int level = 1; level <= kLevels; ++level) {
      const double cap = fmax * level / kLevels;
      const std::size_t support = (n * static_cast<std::size_t>(level) + kLevels - 1) / kLevels;
      VectorFunction fn(space, dim);
      for (std::size_t i = 0; i < support; ++i)
        for (int j = 0; j < dim; ++j) fn[i](j) = std::min(vals[i](j).real(), cap);
      const double cur = norm(fn, ns);
      if (cur < prev - 1e-10 * (1.0 + target)) ok = false;
      prev = cur;
    }
    if (std::abs(prev - target) > 1e-10 * (1.0 + target)) ok = false;
    if (!ok) ++report.fatou_violations;
  }

  // (iii) int_E ||f|| dmu <= C_E ||f||_X with a finite constant.
  std::vector<MeasurableSet> sets;
  sets.push_back(MeasurableSet::full(space));
  const std::size_t set_count = std::max<std::size_t>(1, sample_count / 10);
  for (std::size_t s = 0; s < set_count; ++s) {
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = uniform(rng, 0.0, 1.0) < 0.5;
    sets.emplace_back(space, std::move(mask));
  }
  const CVector ones = CVector::Ones(dim);
  for (const MeasurableSet& set : sets) {
    SetConstant sc;
    sc.measure = measure_of(set);
    if (ns.family() == NormSpec::Family::Lp) {
      sc.closed_form = std::isinf(ns.p()) ? sc.measure : std::pow(sc.measure, 1.0 - 1.0 / ns.p());
    }
    const VectorFunction ind = indicator(set, ones);
    const double ind_norm = norm(ind, ns);
    bool ok = std::isfinite(ind_norm);
    auto observe = [&](const VectorFunction& f) {
      const double lhs = local_integral(f, set);
      const double rhs = norm(f, ns);
      if (lhs == 0.0) return;
      if (!(rhs > 0.0)) {
        ok = false;
        return;
      }
      sc.sampled = std::max(sc.sampled, lhs / rhs);
    };
    observe(ind);
    for (std::size_t s = 0; s < sample_count; ++s) observe(random_function(space, dim, rng));
    if (!std::isfinite(sc.sampled)) ok = false;
    if (sc.closed_form && sc.sampled > *sc.closed_form + 1e-9) ok = false;
    if (!ok) ++report.local_integrability_violations;
    report.set_constants.push_back(sc);
  }
  return report;
}

AbsoluteContinuityResult absolute_continuity_check(const VectorFunction& f,
                                                   const std::vector<MeasurableSet>& sets,
                                                   const NormSpec& ns) {
  AbsoluteContinuityResult out;
  if (sets.empty()) throw DomainError("absolute continuity check needs at least one set");
  for (std::size_t k = 1; k < sets.size(); ++k)
    if (!sets[k].subset_of(sets[k - 1])) throw DomainError("sets are not nested at step " + std::to_string(k));
  bool decreasing = true;
  for (const MeasurableSet& e : sets) {
    const double v = norm(restrict_to(f, e), ns);
    if (!out.norms.empty() && v > out.norms.back() * (1.0 + 1e-12)) decreasing = false;
    out.norms.push_back(v);
  }
  out.absolutely_continuous = decreasing && out.norms.back() < 1e-10;
  return out;
}

double lp_associate_norm(const VectorFunction& f, double p) {
  if (!(p >= 1.0)) throw DomainError("associate norm needs p >= 1");
  const MeasureSpace& space = *f.space();
  // p' = p / (p - 1); L^1 pairs with L^inf and vice versa.
  double out = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (space.weights()[i] > 0.0) out = std::max(out, f[i].lpNorm<1>());
    return out;
  }
  if (std::isinf(p)) {
    for (std::size_t i = 0; i < f.size(); ++i) out += space.weights()[i] * f[i].lpNorm<1>();
    return out;
  }
  const double dual = p / (p - 1.0);
  for (std::size_t i = 0; i < f.size(); ++i) out += space.weights()[i] * std::pow(f[i].lpNorm<1>(), dual);
  return std::pow(out, 1.0 / dual);
}

double associate_norm_estimate(const VectorFunction& f, const NormSpec& ns, std::size_t trials,
                               std::uint64_t seed) {
  Rng rng(seed);
  const MeasureSpace& space = *f.space();
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const VectorFunction g = random_function(f.space(), f.dim(), rng);
    Complex pairing = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) pairing += space.weights()[i] * (g[i].transpose() * f[i]).value();
    const double gn = norm(g, ns);
    if (gn > 0.0) best = std::max(best, std::abs(pairing) / gn);
  }
  return best;
}

}  // namespace multop
