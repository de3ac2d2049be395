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

#include "multop/errors.hpp"
#include "multop/multiplication_operator.hpp"
#include "multop/oracle.hpp"
#include "support/oracles.hpp"

using namespace multop;
using multop::testing::finite_space;
using multop::testing::mat2;
using multop::testing::scalar_table;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VectorFunction random_function(Rng& rng, const SpacePtr& s, int n) {
  std::vector<CVector> v(s->size());
  for (CVector& x : v) x = random_vector(rng, n);
  return VectorFunction(s, std::move(v));
}

std::vector<NormSpec> suite() {
  return {NormSpec::lp(1.0), NormSpec::lp(2.0), NormSpec::lp(kInf),
          NormSpec::orlicz(YoungFunction::builtin("tp_log", 2.0)), NormSpec::lorentz(2.0, 1.0)};
}

SpacePtr geometric(std::size_t truncation) {
  return make_space(MeasureSpace::sequence(WeightRule{WeightRule::Kind::Geometric, 1.0, 0.5}, truncation));
}

}  // namespace

TEST_CASE("apply") {
  Rng rng(31);
  const SpacePtr s = finite_space({1.0, 1.0}, {1.0, 2.0});
  const VectorFunction f = random_function(rng, s, 2);
  CHECK(max_pointwise_distance(apply(SymbolFunction::identity(s, 2), f), f) == 0.0);
  const VectorFunction z = apply(SymbolFunction::constant(s, CMatrix::Zero(2, 2)), f);
  for (std::size_t i = 0; i < 2; ++i) CHECK(z[i].isZero(0.0));

  const SymbolFunction d = SymbolFunction::expressions(
      s, 2, {Expression::parse("x"), Expression::parse("0"), Expression::parse("0"), Expression::parse("-x")});
  const VectorFunction g = apply(d, VectorFunction(s, std::vector<CVector>(2, CVector::Ones(2))));
  CHECK(g[0](0) == 1.0);
  CHECK(g[0](1) == -1.0);
  CHECK(g[1](0) == 2.0);
  CHECK(g[1](1) == -2.0);
  CHECK_THROWS_AS(apply(d, VectorFunction(s, 3)), DomainError);
}

TEST_CASE("operator norm fixtures") {
  const SpacePtr s = finite_space({1.0, 0.5});
  CHECK(operator_norm(SymbolFunction::identity(s, 2, Complex(-3.0, 4.0))) == 5.0);
  const SymbolFunction u = SymbolFunction::table(s, {mat2(3.0, -4.0, 0.0, 1.0), mat2(1.0, 1.0, 1.0, 2.0)});
  CHECK(operator_norm(u) == 7.0);
  CHECK(operator_norm_least_bound(u) == 7.0);

  // A huge value on a null atom is invisible.
  const SpacePtr z = finite_space({1.0, 0.0, 1.0});
  const SymbolFunction w = scalar_table(z, {1.0, 1e9, 2.0});
  CHECK(operator_norm(w) == 2.0);
  CHECK(operator_norm_least_bound(w) == 2.0);

  const SymbolFunction pole = SymbolFunction::expressions(finite_space({1.0, 1.0}, {0.0, 1.0}), 1,
                                                          {Expression::parse("1/x")});
  CHECK(std::isinf(operator_norm(pole)));
}

TEST_CASE("operator norm: sup formula, least-bound formula and the dense oracle") {
  Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 20);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    const double analytic = operator_norm(u);
    CHECK(operator_norm_least_bound(u) == analytic);
    const DenseOperator d = assemble_dense(u);
    for (const NormSpec& ns : suite()) {
      const double estimate = operator_norm_estimate(d, ns, 10, k);
      CHECK(estimate <= analytic + 1e-9);
      CHECK(analytic <= estimate + 1e-9);
      for (int t = 0; t < 10; ++t) {
        const VectorFunction f = random_function(rng, s, u.dim());
        CHECK(norm(apply(u, f), ns) <= analytic * norm(f, ns) * (1 + 1e-10));
      }
    }
  }
}

TEST_CASE("essential range") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0});
  CHECK(essential_range(SymbolFunction::constant(s, CMatrix::Constant(1, 1, 5.0))).points == std::vector<Complex>{5.0});
  CHECK(essential_range(SymbolFunction::expressions(s, 1, {Expression::parse("x")})).points ==
        std::vector<Complex>{1.0, 2.0, 3.0});
  const SpacePtr z = finite_space({1.0, 0.0, 1.0});
  CHECK(essential_range(scalar_table(z, {1.0, 9.0, 1.0})).points == std::vector<Complex>{1.0});
  CHECK_THROWS_AS(essential_range(SymbolFunction::identity(s, 2)), DomainError);
}

TEST_CASE("spectrum fixtures") {
  const SpacePtr s = finite_space({1.0, 1.0}, {1.0, 2.0});
  CHECK(spectrum(SymbolFunction::constant(s, mat2(1.0, 0.0, 0.0, 2.0))).points == std::vector<Complex>{1.0, 2.0});
  const SymbolFunction nil = SymbolFunction::expressions(
      s, 2, {Expression::parse("0"), Expression::parse("x"), Expression::parse("0"), Expression::parse("0")});
  CHECK(spectrum(nil).points == std::vector<Complex>{0.0});
}

TEST_CASE("spectrum against the dense oracle and the essential range") {
  Rng rng(33);
  for (int k = 0; k < 30; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 20);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    CHECK(hausdorff_distance(spectrum(u).points, dense_eigenvalues(assemble_dense(u))) <= 1e-8);
    if (u.dim() == 1) CHECK(spectrum(u).points == essential_range(u).points);
  }
}

TEST_CASE("bounded iff the spectrum is bounded") {
  const SpacePtr seq = geometric(16);
  const Expression x = Expression::parse("x");
  const SymbolFunction unbounded = SymbolFunction::expressions(seq, 1, {x}).with_envelope(
      TailEnvelope{x, kInf, x, kInf});
  CHECK(std::isinf(operator_norm(unbounded)));
  CHECK_FALSE(spectrum(unbounded).bounded());

  const Expression inv = Expression::parse("1/x");
  const SymbolFunction bounded = SymbolFunction::expressions(seq, 1, {inv}).with_envelope(
      TailEnvelope{inv, 0.0, std::nullopt, 0.0});
  CHECK(operator_norm(bounded) == 1.0);
  CHECK(spectrum(bounded).bounded());
}

TEST_CASE("invertibility") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0}, {0.0, 1.0, 2.0});
  const InvertibilityResult two = is_invertible(SymbolFunction::identity(s, 2, 2.0));
  CHECK(two.verdict == Verdict::True);
  CHECK(two.delta == 2.0);
  REQUIRE(two.inverse.has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(two.inverse->eval_at(i) == 0.5 * CMatrix::Identity(2, 2));

  const SymbolFunction xi = SymbolFunction::expressions(
      s, 2, {Expression::parse("x"), Expression::parse("0"), Expression::parse("0"), Expression::parse("x")});
  CHECK(is_invertible(xi).verdict == Verdict::False);

  const InvertibilityResult nil = is_invertible(SymbolFunction::constant(s, mat2(0.0, 1.0, 0.0, 0.0)));
  CHECK(nil.verdict == Verdict::False);
  CHECK(nil.delta == 0.0);
}

TEST_CASE("inverse symbols reproduce probes") {
  Rng rng(34);
  for (int k = 0; k < 30; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 10);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 3);
    const InvertibilityResult r = is_invertible(u);
    if (r.verdict != Verdict::True) continue;
    CHECK(r.probe_residual <= 1e-9);
    for (int t = 0; t < 20; ++t) {
      const VectorFunction f = random_function(rng, s, u.dim());
      CHECK(max_pointwise_distance(apply(*r.inverse, apply(u, f)), f) <= 1e-9);
    }
  }
}

TEST_CASE("closed range fixtures") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0});
  const ClosedRangeResult zero = has_closed_range(scalar_table(s, {0.0, 0.0, 0.0}));
  CHECK(zero.verdict == Verdict::True);
  CHECK(std::isinf(zero.delta));
  const ClosedRangeResult r = has_closed_range(scalar_table(s, {2.0, 3.0, 0.0}));
  CHECK(r.verdict == Verdict::True);
  CHECK(r.delta == 2.0);
  CHECK(r.support == std::vector<std::size_t>{0, 1});

  const SpacePtr seq = geometric(24);
  const Expression inv = Expression::parse("1/x");
  const SymbolFunction decaying = SymbolFunction::expressions(seq, 1, {inv}).with_envelope(
      TailEnvelope{inv, 0.0, std::nullopt, 0.0});
  for (double tol : {1e-3, 1e-9, 1e-15}) {
    const ClosedRangeResult d = has_closed_range(decaying, tol);
    CHECK(d.verdict == Verdict::False);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->ratio < tol);
  }
  CHECK_THROWS_AS(has_closed_range(SymbolFunction::identity(s, 2)), DomainError);
}

TEST_CASE("closed range: lower bound on the support, witness otherwise") {
  Rng rng(35);
  for (int k = 0; k < 40; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 12);
    std::vector<Complex> values(12);
    for (Complex& v : values) v = uniform(rng, 0, 1) < 0.3 ? Complex(0.0) : random_complex(rng);
    if (k % 2) values[k % 12] = 1e-13;
    const SymbolFunction u = scalar_table(s, values);
    const ClosedRangeResult r = has_closed_range(u);
    if (r.verdict == Verdict::True) {
      std::vector<bool> mask(12, false);
      for (std::size_t a : r.support) mask[a] = true;
      for (int t = 0; t < 10; ++t) {
        const VectorFunction f = restrict_to(random_function(rng, s, 1), MeasurableSet(s, mask));
        for (const NormSpec& ns : suite()) CHECK(norm(apply(u, f), ns) >= (r.delta - 1e-9) * norm(f, ns));
      }
    } else {
      REQUIRE(r.verdict == Verdict::False);
      REQUIRE(r.witness.has_value());
      const VectorFunction probe = indicator(MeasurableSet::singleton(s, r.witness->atom), CVector::Ones(1));
      for (const NormSpec& ns : suite()) CHECK(norm(apply(u, probe), ns) < kDefaultTol * norm(probe, ns));
    }
  }
}

TEST_CASE("compactness") {
  Rng rng(36);
  CHECK(is_compact(multop::testing::random_table(rng, multop::testing::random_finite_space(rng, 5), 2)).verdict ==
        Verdict::True);
  const SpacePtr seq = geometric(20);
  const Expression inv = Expression::parse("1/x"), zero = Expression::constant(0.0);
  const SymbolFunction decaying = SymbolFunction::expressions(seq, 2, {inv, zero, zero, inv})
                                      .with_envelope(TailEnvelope{inv, 0.0, std::nullopt, 0.0});
  const CompactnessResult c = is_compact(decaying);
  CHECK(c.verdict == Verdict::True);
  for (const LevelSet& l : c.levels) {
    CHECK(l.finite);
    CHECK(l.size_bound <= std::floor(1.0 / l.eps) + 1e-9);
  }
  const CompactnessResult id = is_compact(SymbolFunction::identity(seq, 2));
  CHECK(id.verdict == Verdict::False);
  const SymbolFunction one_env = SymbolFunction::expressions(seq, 1, {Expression::constant(1.0)})
                                     .with_envelope(TailEnvelope{Expression::constant(1.0), 1.0, std::nullopt, 0.0});
  CHECK(is_compact(one_env).verdict == Verdict::False);
  CHECK_THROWS_AS(is_compact(SymbolFunction::expressions(seq, 1, {inv})), ConfigError);
}

TEST_CASE("Fredholm fixtures") {
  const SpacePtr s = finite_space({0.25, 0.25, 0.25, 0.25}, {}, true);
  const FredholmResult c = is_fredholm(SymbolFunction::constant(s, CMatrix::Constant(1, 1, Complex(0.0, 3.0))),
                                       NormSpec::lp(2.0));
  CHECK(c.verdict == Verdict::True);
  CHECK(c.invertible);
  CHECK(c.lower_bound_everywhere);
  CHECK(c.closed_range_full_support);
  CHECK(c.agree);
  CHECK(c.refine_stable);

  const FredholmResult z = is_fredholm(scalar_table(s, {1.0, 0.0, 2.0, 3.0}), NormSpec::lp(1.0));
  CHECK(z.verdict == Verdict::False);
  CHECK_FALSE(z.lower_bound_everywhere);
  CHECK(z.agree);

  CHECK_THROWS_AS(is_fredholm(scalar_table(s, {1.0, 1.0, 1.0, 1.0}), NormSpec::lp(kInf)), DomainError);
  CHECK_THROWS_AS(is_fredholm(scalar_table(finite_space({1.0, 1.0}), {1.0, 1.0}), NormSpec::lp(2.0)), DomainError);
  CHECK_THROWS_AS(is_fredholm(SymbolFunction::identity(s, 2), NormSpec::lp(2.0)), DomainError);
}

TEST_CASE("Fredholm equivalences on random scalar symbols") {
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 10, true);
    std::vector<Complex> values(10);
    for (Complex& v : values) v = uniform(rng, 0, 1) < 0.1 ? Complex(0.0) : Complex(uniform(rng, 0.1, 1.0));
    const FredholmResult r = is_fredholm(scalar_table(s, values), NormSpec::lorentz(2.0, 1.0));
    CHECK(r.invertible == r.lower_bound_everywhere);
    CHECK(r.agree);
    CHECK(r.refine_stable);
  }
}

TEST_CASE("commutant recovery") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0});
  CMatrix d = CMatrix::Zero(3, 3);
  d.diagonal() << 1.0, Complex(0.0, 2.0), -3.0;
  const CommutantResult r = commutant_recover(d, s);
  REQUIRE(r.accepted);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.symbol->eval_at(i)(0, 0) == d(i, i));
  CHECK(r.reconstruction_error == 0.0);

  CMatrix swap = CMatrix::Identity(3, 3);
  swap.row(0).swap(swap.row(1));
  const CommutantResult p = commutant_recover(swap, s);
  CHECK_FALSE(p.accepted);
  REQUIRE(p.witness_atom.has_value());
  CHECK(*p.witness_atom <= 1);

  Rng rng(38);
  for (int k = 0; k < 50; ++k) {
    CMatrix a = CMatrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) a(i, i) = random_complex(rng);
    const CommutantResult ok = commutant_recover(a, multop::testing::random_finite_space(rng, 8));
    CHECK(ok.accepted);
    CHECK(ok.reconstruction_error <= 1e-10);
    CHECK(ok.bounded);
    CHECK_FALSE(commutant_recover(random_matrix(rng, 8), multop::testing::random_finite_space(rng, 8)).accepted);
  }
}

TEST_CASE("analyze report invariants") {
  Rng rng(39);
  for (int k = 0; k < 20; ++k) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 6, k % 2 == 0);
    const SymbolFunction u = multop::testing::random_table(rng, s, 1 + k % 2);
    const OperatorReport r = analyze(u, NormSpec::lp(2.0));
    if (r.invertible == Verdict::True) {
      for (const Complex& z : r.spectrum.points) CHECK(std::abs(z) >= r.delta_invertibility);
    }
    if (r.fredholm != Verdict::NotApplicable) CHECK(r.fredholm == r.invertible);
    CHECK((r.bounded == Verdict::True) == std::isfinite(r.operator_norm));
    CHECK((r.bounded == Verdict::True) == r.spectrum.bounded());
  }
}
