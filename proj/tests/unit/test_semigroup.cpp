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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "multop/errors.hpp"
#include "multop/semigroup.hpp"
#include "support/oracles.hpp"

using namespace multop;
using multop::testing::finite_space;
using multop::testing::mat2;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VectorFunction random_function(Rng& rng, const SpacePtr& s, int n) {
  std::vector<CVector> v(s->size());
  for (CVector& x : v) x = random_vector(rng, n);
  return VectorFunction(s, std::move(v));
}

SymbolFunction scaled(const SymbolFunction& u, double target) {
  std::vector<CMatrix> v;
  const double f = target / operator_norm(u);
  for (std::size_t i = 0; i < u.space()->size(); ++i) v.push_back(f * u.eval_at(i));
  return SymbolFunction::table(u.space(), std::move(v));
}

SpacePtr geometric(std::size_t truncation) {
  return make_space(MeasureSpace::sequence(WeightRule{WeightRule::Kind::Geometric, 1.0, 0.5}, truncation));
}

}  // namespace

TEST_CASE("generation fixtures") {
  const SpacePtr s = finite_space({1.0, 1.0});
  const GenerationResult dissipative = generation_check(SymbolFunction::constant(s, mat2(-1.0, 0.0, 0.0, -2.0)));
  CHECK(dissipative.generates_c0);
  CHECK(dissipative.c == 1.0);

  const GenerationResult nil = generation_check(SymbolFunction::constant(s, mat2(0.0, 1.0, 0.0, 0.0)));
  CHECK(nil.generates_c0);
  CHECK(nil.c == doctest::Approx(2.0).epsilon(1e-15));

  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    const SymbolFunction u = scaled(multop::testing::random_table(rng, multop::testing::random_finite_space(rng, 5), 1 + k % 3), 10.0);
    CHECK(generation_check(u).generates_c0);
  }
}

TEST_CASE("bounded spectral bound with unbounded semigroup norms") {
  // u_k = [[0, k], [0, 0]]: s(u_k) = 0 for every k, ||exp(t u_k)|| = 1 + t k.
  const SpacePtr seq = geometric(16);
  const Expression zero = Expression::constant(0.0), x = Expression::parse("x");
  const SymbolFunction u = SymbolFunction::expressions(seq, 2, {zero, x, zero, zero})
                               .with_envelope(TailEnvelope{x, kInf, zero, 0.0});
  const GenerationResult g = generation_check(u);
  CHECK_FALSE(g.generates_c0);
  CHECK(g.c > kGenerationCap);
  // Direct evaluation at a far atom confirms the blow-up.
  CHECK(sup_induced_norm(expm(u.eval_at(2000000))) == doctest::Approx(2000002.0));
  const IntegratedCheck ic = integrated_semigroup_check(u);
  CHECK(ic.generator);
  CHECK(ic.w == 0.0);
}

TEST_CASE("an unbounded scalar symbol with a dissipative tail generates") {
  const SpacePtr seq = geometric(16);
  const Expression minus_x = Expression::parse("-x"), x = Expression::parse("x");
  const SymbolFunction u = SymbolFunction::expressions(seq, 1, {minus_x})
                               .with_envelope(TailEnvelope{x, kInf, minus_x, -kInf});
  const GenerationResult g = generation_check(u);
  CHECK(g.generates_c0);
  CHECK(g.c == 1.0);
  const SymbolFunction up = SymbolFunction::expressions(seq, 1, {x}).with_envelope(TailEnvelope{x, kInf, x, kInf});
  CHECK_FALSE(generation_check(up).generates_c0);
  CHECK_FALSE(integrated_semigroup_check(up).generator);
}

TEST_CASE("semigroup values") {
  Rng rng(42);
  const SpacePtr s = multop::testing::random_finite_space(rng, 4);
  const SymbolFunction u = multop::testing::random_table(rng, s, 3);
  const SymbolFunction t0 = semigroup_at(u, 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(t0.eval_at(i) == CMatrix::Identity(3, 3));

  const SymbolFunction d = SymbolFunction::constant(s, mat2(0.5, 0.0, 0.0, Complex(-1.0, 2.0)));
  const CMatrix e = semigroup_at(d, 1.0).eval_at(2);
  CHECK(std::abs(e(0, 0) - std::exp(0.5)) <= 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(Complex(-1.0, 2.0))) <= 1e-14);
  CHECK(std::abs(e(0, 1)) == 0.0);
  CHECK_THROWS_AS(semigroup_at(u, -1.0), DomainError);
}

TEST_CASE("semigroup law on [0, 2]") {
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 5);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    for (int t = 0; t < 5; ++t) {
      const double a = uniform(rng, 0.0, 2.0), b = uniform(rng, 0.0, 2.0);
      const SymbolFunction sa = semigroup_at(u, a), sb = semigroup_at(u, b), sab = semigroup_at(u, a + b);
      for (std::size_t i = 0; i < 5; ++i) {
        const CMatrix lhs = sab.eval_at(i);
        CHECK((lhs - sa.eval_at(i) * sb.eval_at(i)).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
      }
    }
  }
}

TEST_CASE("generator consistency") {
  Rng rng(44);
  for (int k = 0; k < 10; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 4);
    const SymbolFunction u = multop::testing::random_table(rng, s, 2);
    const VectorFunction x = random_function(rng, s, 2);
    const VectorFunction ux = apply(u, x);
    auto err = [&](double h) {
      VectorFunction q = apply(semigroup_at(u, h), x) - x;
      q *= 1.0 / h;
      return max_pointwise_distance(q, ux);
    };
    const double ratio = err(1e-3) / err(5e-4);
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
  }
}

TEST_CASE("solve_acp") {
  Rng rng(45);
  const SpacePtr s = multop::testing::random_finite_space(rng, 6);
  const SymbolFunction u = multop::testing::random_table(rng, s, 2);
  const Trajectory zero = solve_acp(u, VectorFunction(s, 2), {0.0, 0.5, 1.0});
  for (const VectorFunction& v : zero.values)
    for (std::size_t i = 0; i < 6; ++i) CHECK(v[i].isZero(0.0));

  const VectorFunction x = random_function(rng, s, 2);
  const Trajectory minus = solve_acp(SymbolFunction::identity(s, 2, -1.0), x, {0.0, 0.3, 1.0, 2.5});
  CHECK(max_pointwise_distance(minus.values[0], x) == 0.0);
  for (std::size_t k = 0; k < minus.times.size(); ++k) {
    VectorFunction expect = x;
    expect *= std::exp(-minus.times[k]);
    CHECK(max_pointwise_distance(minus.values[k], expect) <= 1e-12);
  }
  CHECK_THROWS_AS(solve_acp(u, x, {0.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(solve_acp(u, x, {1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(solve_acp(u, x, {-1.0, 0.5}), DomainError);
}

TEST_CASE("solve_acp against RK4") {
  Rng rng(46);
  for (int k = 0; k < 20; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 5);
    const SymbolFunction u = scaled(multop::testing::random_table(rng, s, 1 + k % 3), uniform(rng, 0.1, 2.0));
    const VectorFunction x = random_function(rng, s, u.dim());
    const VectorFunction v = solve_acp(u, x, {0.0, 1.0}).values.back();
    CHECK(max_pointwise_distance(rk4_oracle(u, x, 1.0, 1e-3), v) <= 1e-6);
  }
}

TEST_CASE("RK4 oracle fixtures") {
  Rng rng(47);
  const SpacePtr s = multop::testing::random_finite_space(rng, 3);
  const VectorFunction x = random_function(rng, s, 2);
  CHECK(max_pointwise_distance(rk4_oracle(SymbolFunction::constant(s, CMatrix::Zero(2, 2)), x, 1.0, 0.1), x) == 0.0);
  const VectorFunction scalar = random_function(rng, s, 1);
  const VectorFunction e = rk4_oracle(SymbolFunction::identity(s, 1), scalar, 1.0, 1e-3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(e[i](0) - std::exp(1.0) * scalar[i](0)) <= 1e-10 * std::abs(scalar[i](0)));
  CHECK_THROWS_AS(rk4_oracle(SymbolFunction::identity(s, 1), scalar, 1.0, 0.0), DomainError);
}

TEST_CASE("RK4 is fourth order") {
  Rng rng(48);
  for (int k = 0; k < 20; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 5);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    const VectorFunction x = random_function(rng, s, u.dim());
    const VectorFunction exact = solve_acp(u, x, {0.0, 1.0}).values.back();
    const double ratio = max_pointwise_distance(rk4_oracle(u, x, 1.0, 0.1), exact) /
                         max_pointwise_distance(rk4_oracle(u, x, 1.0, 0.05), exact);
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
  }
}

TEST_CASE("spectral mapping") {
  const SpacePtr s = finite_space({1.0, 1.0});
  Rng rng(49);
  const SymbolFunction u = multop::testing::random_table(rng, s, 3);
  CHECK(spectral_mapping_check(u, 0.0) == 0.0);
  const SymbolFunction ipi = SymbolFunction::constant(s, CMatrix::Constant(1, 1, Complex(0.0, std::numbers::pi)));
  CHECK(spectral_mapping_check(ipi, 1.0) <= 1e-10);
  for (int k = 0; k < 20; ++k) {
    const SymbolFunction r = multop::testing::random_table(rng, multop::testing::random_finite_space(rng, 20), 1 + k % 3);
    for (double t : {0.5, 1.0, 2.0}) CHECK(spectral_mapping_check(r, t) <= 1e-8);
  }
}

TEST_CASE("resolvent") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0});
  const SymbolFunction zero = SymbolFunction::constant(s, CMatrix::Zero(2, 2));
  CHECK(resolvent(zero, 1.0).eval_at(0) == CMatrix::Identity(2, 2));
  const SymbolFunction d = SymbolFunction::constant(s, mat2(2.0, 0.0, 0.0, Complex(0.0, 1.0)));
  const Complex lambda(1.0, 1.0);
  const CMatrix r = resolvent(d, lambda).eval_at(1);
  CHECK(std::abs(r(0, 0) - 1.0 / (lambda - 2.0)) <= 1e-15);
  CHECK(std::abs(r(1, 1) - 1.0 / (lambda - Complex(0.0, 1.0))) <= 1e-15);
  CHECK_THROWS_AS(resolvent(d, 2.0), DomainError);
  CHECK_THROWS_AS(resolvent(d, Complex(0.0, 1.0 + 1e-12)), DomainError);
}

TEST_CASE("resolvent identity") {
  Rng rng(50);
  for (int k = 0; k < 20; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 5);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    const Complex lambda = 4.0 * random_complex(rng) + 5.0, nu = 4.0 * random_complex(rng) - 5.0;
    const SymbolFunction rl = resolvent(u, lambda), rn = resolvent(u, nu);
    for (std::size_t i = 0; i < 5; ++i) {
      const CMatrix lhs = rl.eval_at(i) - rn.eval_at(i);
      const CMatrix rhs = (nu - lambda) * rl.eval_at(i) * rn.eval_at(i);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("integrated semigroup check") {
  const SpacePtr s = finite_space({1.0, 1.0});
  const IntegratedCheck a = integrated_semigroup_check(SymbolFunction::constant(s, mat2(-1.0, 0.0, 0.0, 3.0)));
  CHECK(a.generator);
  CHECK(a.w == 3.0);
  const IntegratedCheck b = integrated_semigroup_check(SymbolFunction::constant(s, mat2(0.0, 1.0, 0.0, 0.0)));
  CHECK(b.generator);
  CHECK(b.w == 0.0);
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    const IntegratedCheck c = integrated_semigroup_check(
        multop::testing::random_table(rng, multop::testing::random_finite_space(rng, 10), 1 + k % 3));
    CHECK(c.agree);
    CHECK(c.generator == c.half_plane);
    CHECK(c.w_from_spectrum <= c.w + 1e-9);
    CHECK(c.w_from_spectrum >= c.w - 1e-9);
  }
}

TEST_CASE("integrated semigroup values") {
  const SpacePtr s = finite_space({1.0});
  const SymbolFunction zero = SymbolFunction::constant(s, CMatrix::Zero(2, 2));
  CHECK((integrated_semigroup_at(zero, 1.5, 1).eval_at(0) - 1.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-14);
  const double a = -0.7;
  const CMatrix one = integrated_semigroup_at(SymbolFunction::constant(s, CMatrix::Constant(1, 1, a)), 2.0, 1).eval_at(0);
  CHECK(std::abs(one(0, 0) - (std::exp(a * 2.0) - 1.0) / a) <= 1e-10);

  Rng rng(52);
  for (int k = 0; k < 30; ++k) {
    const CMatrix m = random_matrix(rng, 2) + 0.5 * CMatrix::Identity(2, 2);
    const double t = uniform(rng, 0.1, 2.0);
    const CMatrix inv = inverse(m);
    const CMatrix closed = inv * inv * (expm(t * m) - CMatrix::Identity(2, 2) - t * m);
    CHECK((integrated_block(m, t, 2) - closed).cwiseAbs().maxCoeff() <= 1e-8);
    for (int deg : {1, 3, 5}) {
      const CMatrix ref = multop::testing::integrated_series(m, t, deg);
      CHECK((integrated_block(m, t, deg) - ref).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }
  }
  CHECK(integrated_semigroup_at(zero, 1.0, 0).eval_at(0) == CMatrix::Identity(2, 2));
}

TEST_CASE("Laplace identity") {
  const SpacePtr s = finite_space({1.0, 0.5});
  const SymbolFunction zero = SymbolFunction::constant(s, CMatrix::Zero(1, 1));
  CHECK(laplace_identity_check(zero, 1.0, 1).relative_error <= 1e-9);
  const SymbolFunction minus = SymbolFunction::constant(s, CMatrix::Constant(1, 1, -1.0));
  CHECK(laplace_identity_check(minus, 1.0, 0).relative_error <= 1e-9);
  CHECK_THROWS_AS(laplace_identity_check(minus, -1.0, 1), DomainError);
  CHECK_THROWS_AS(laplace_identity_check(minus, 1.0, 1, 1.0), DomainError);

  Rng rng(53);
  for (int k = 0; k < 6; ++k) {
    const int n = 1 + k % 3;
    const SymbolFunction u = scaled(multop::testing::random_table(rng, multop::testing::random_finite_space(rng, 3), n), 1.0);
    const double w = integrated_semigroup_check(u).w;
    for (int m : {1, 2, default_integration_degree(n)})
      CHECK(laplace_identity_check(u, Complex(w + 3.0, 0.5), m).relative_error <= 1e-4);
  }
}

TEST_CASE("stability bound") {
  const SpacePtr s = finite_space({0.5, 0.5});
  const VectorFunction x(s, std::vector<CVector>(2, CVector::Ones(2)));
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(0.25 * k);

  const StabilityFit d = stability_bound(SymbolFunction::constant(s, mat2(-1.0, 0.0, 0.0, -2.0)), x, NormSpec::lp(2.0), grid);
  CHECK(d.w_star == -1.0);
  for (std::size_t k = 1; k < d.norms.size(); ++k) CHECK(d.norms[k] < d.norms[k - 1]);
  CHECK(d.fitted_m <= 1.0 + 1e-12);

  // Polynomial growth at s(u) = 0: ||v(t)|| grows like 1 + t.
  const StabilityFit nil = stability_bound(SymbolFunction::constant(s, mat2(0.0, 1.0, 0.0, 0.0)), x, NormSpec::lp(2.0), grid, 0.5);
  CHECK(nil.w_star == 0.0);
  CHECK(nil.norms.back() <= (1.0 + grid.back()) * nil.norms.front() * (1 + 1e-12));
  CHECK(nil.fitted_m <= 2.0);

  Rng rng(54);
  for (int k = 0; k < 10; ++k) {
    const SpacePtr r = multop::testing::random_finite_space(rng, 5);
    std::vector<CMatrix> vals;
    for (std::size_t i = 0; i < 5; ++i) {
      CMatrix m = random_matrix(rng, 2);
      m -= (spectral_bound(m) + uniform(rng, 0.5, 2.0)) * CMatrix::Identity(2, 2);
      vals.push_back(m);
    }
    const SymbolFunction u = SymbolFunction::table(r, vals);
    const VectorFunction y = random_function(rng, r, 2);
    const StabilityFit f = stability_bound(u, y, NormSpec::lp(2.0), grid);
    CHECK(f.w_star <= -0.5);
    CHECK(f.fitted_m <= 100.0);
    CHECK(f.norms.back() / norm(y, NormSpec::lp(2.0)) <= f.fitted_m * std::exp((f.w_star + 1e-3) * 10.0) * (1 + 1e-12));
  }
}

TEST_CASE("graph-norm solution bound") {
  // ||v(t)|| <= M exp(w t) sum_{k <= m} ||u^k x|| with M fitted on the grid.
  Rng rng(55);
  for (int k = 0; k < 10; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 4);
    const SymbolFunction u = multop::testing::random_table(rng, s, 2);
    const VectorFunction x = random_function(rng, s, 2);
    const int m = default_integration_degree(2);
    double graph = 0.0;
    SymbolFunction power = SymbolFunction::identity(s, 2);
    for (int j = 0; j <= m; ++j) {
      graph += norm(apply(power, x), NormSpec::lp(2.0));
      power = multiply(power, u);
    }
    const double w = integrated_semigroup_check(u).w;
    const Trajectory traj = solve_acp(u, x, {0.0, 0.5, 1.0, 2.0, 4.0});
    double fitted = 0.0;
    for (std::size_t j = 0; j < traj.times.size(); ++j)
      fitted = std::max(fitted, norm(traj.values[j], NormSpec::lp(2.0)) / (std::exp((w + 1e-3) * traj.times[j]) * graph));
    CHECK(std::isfinite(fitted));
    CHECK(fitted <= 10.0);
  }
}

TEST_CASE("trajectory CSV") {
  const SpacePtr s = finite_space({1.0, 1.0});
  const VectorFunction x(s, std::vector<CVector>(2, CVector::Ones(1)));
  std::ostringstream out;
  write_trajectory_csv(solve_acp(SymbolFunction::identity(s, 1, -1.0), x, {0.0, 1.0}), out);
  CHECK(out.str() ==
        "t,atom_index,component,re,im\n0,0,0,1,0\n0,1,0,1,0\n1,0,0,0.36787944117144233,0\n1,1,0,0.36787944117144233,0\n");
}
