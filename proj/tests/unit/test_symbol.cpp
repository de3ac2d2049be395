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
#include <numbers>

#include "multop/errors.hpp"
#include "multop/expression.hpp"
#include "multop/symbol.hpp"
#include "support/oracles.hpp"

using namespace multop;
using multop::testing::finite_space;

TEST_CASE("expression evaluation") {
  CHECK(std::abs(Expression::parse("exp(i*x)").evaluate(std::numbers::pi) - Complex(-1.0, 0.0)) <= 1e-12);
  CHECK(Expression::parse("x^2 + 1").evaluate(2.0) == Complex(5.0));
  CHECK(Expression::parse("2^3^2").evaluate(0.0) == Complex(512.0));
  CHECK(Expression::parse("-2^2").evaluate(0.0) == Complex(-4.0));
  CHECK(Expression::parse("8/4/2").evaluate(0.0) == Complex(1.0));
  CHECK(Expression::parse("5-3-1").evaluate(0.0) == Complex(1.0));
  CHECK(Expression::parse("2*x+3*x^2").evaluate(-1.0) == Complex(1.0));
  CHECK(std::abs(Expression::parse("sqrt(-4)").evaluate(0.0) - Complex(0.0, 2.0)) <= 1e-15);
  CHECK(Expression::parse("abs(3+4*i)").evaluate(0.0) == Complex(5.0));
  CHECK(Expression::parse("conj(1+2*i)").evaluate(0.0) == Complex(1.0, -2.0));
  CHECK(std::abs(Expression::parse("log(-1)").evaluate(0.0) - Complex(0.0, std::numbers::pi)) <= 1e-15);
  CHECK(std::abs(Expression::parse("sin(x)^2+cos(x)^2").evaluate(0.7) - 1.0) <= 1e-15);
  CHECK(Expression::parse("1e-3*x").evaluate(2.0) == Complex(2e-3));
}

TEST_CASE("expression syntax errors carry the offset") {
  try {
    Expression::parse("2*");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(Expression::parse("foo(x)"), ParseError);
  CHECK_THROWS_AS(Expression::parse("y"), ParseError);
  CHECK_THROWS_AS(Expression::parse("(1+x"), ParseError);
  CHECK_THROWS_AS(Expression::parse("1 2"), ParseError);
  CHECK_THROWS_AS(Expression::parse(""), ParseError);
  CHECK_THROWS_AS(Expression::parse("sin x"), ParseError);
}

TEST_CASE("dyadic literal arithmetic is exact") {
  CHECK(Expression::parse("0.5 + 0.25*3 - 1/8").evaluate(0.0) == Complex(1.125));
  CHECK(Expression::parse("(3/4)^5").evaluate(0.0) == Complex(243.0 / 1024.0));
  CHECK(Expression::parse("2^-3").evaluate(0.0) == Complex(0.125));
  CHECK(Expression::parse("(1+i)^4").evaluate(0.0) == Complex(-4.0, 0.0));
  CHECK(Expression::parse("x^10").evaluate(0.5) == Complex(std::ldexp(1.0, -10)));
}

TEST_CASE("printing and re-parsing preserves evaluation") {
  const char* sources[] = {"exp(i*x)", "x^2 + 1", "-x^3/(1+x^2)", "sqrt(abs(x))*conj(1+2*i)",
                           "log(1+x^2) - sin(2*x)*cos(x/3)", "2^x^0.5", "-(-x)", "1/(x-0.1)+1e-7"};
  Rng rng(5);
  for (const char* src : sources) {
    const Expression e = Expression::parse(src);
    const Expression back = Expression::parse(e.to_string());
    CHECK(Expression::parse(back.to_string()).to_string() == back.to_string());
    for (int k = 0; k < 100; ++k) {
      const double x = uniform(rng, -3.0, 3.0);
      const Complex a = e.evaluate(x), b = back.evaluate(x);
      if (!std::isfinite(a.real())) continue;
      CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("symbol evaluation") {
  const SpacePtr s = finite_space({1.0, 1.0, 1.0}, {0.0, 3.0, 5.0});
  const SymbolFunction id = SymbolFunction::identity(s, 2);
  CHECK(id.eval_at(1) == CMatrix::Identity(2, 2));

  const SymbolFunction d = SymbolFunction::expressions(
      s, 2, {Expression::parse("x"), Expression::parse("0"), Expression::parse("0"), Expression::parse("-x")});
  CHECK(d.eval_at(1) == multop::testing::mat2(3.0, 0.0, 0.0, -3.0));

  const SymbolFunction pole = SymbolFunction::expressions(s, 1, {Expression::parse("1/x")});
  try {
    pole.eval_at(0);
    FAIL("expected a non-finite error");
  } catch (const NonFiniteSymbolError& e) {
    CHECK(e.atom() == 0);
  }
  CHECK(pole.eval_at(1)(0, 0) == Complex(1.0 / 3.0));
}

TEST_CASE("symbol validation") {
  const SpacePtr s = finite_space({1.0, 1.0});
  CHECK_THROWS_AS(SymbolFunction::table(s, {CMatrix::Identity(1, 1)}), Error);
  CHECK_THROWS_AS(SymbolFunction::table(s, {CMatrix::Identity(1, 1), CMatrix::Identity(2, 2)}), Error);
  CHECK_THROWS_AS(SymbolFunction::constant(s, CMatrix::Identity(9, 9)), Error);
  CHECK_THROWS_AS(SymbolFunction::constant(s, CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("refined symbols replicate values") {
  const SpacePtr s = finite_space({0.6, 0.4});
  const SymbolFunction u = multop::testing::scalar_table(s, {2.0, 3.0});
  const SpacePtr fine = make_space(refine(*s, 3));
  const SymbolFunction r = u.refined(fine, 3);
  for (std::size_t i = 0; i < 6; ++i) CHECK(r.eval_at(i)(0, 0) == (i < 3 ? Complex(2.0) : Complex(3.0)));
}

TEST_CASE("tail envelopes are validated") {
  const SpacePtr seq = make_space(MeasureSpace::sequence(WeightRule{}, 16));
  const Expression inv = Expression::parse("1/x");
  const SymbolFunction u = SymbolFunction::expressions(seq, 1, {inv});
  CHECK_THROWS_AS(validate_envelope(u), ConfigError);  // missing
  CHECK_NOTHROW(validate_envelope(u.with_envelope(TailEnvelope{inv, 0.0, std::nullopt, 0.0})));
  // Too small to dominate ||u||.
  CHECK_THROWS_AS(validate_envelope(u.with_envelope(TailEnvelope{Expression::parse("1/x^2"), 0.0, std::nullopt, 0.0})),
                  ConfigError);
  // Not monotone.
  CHECK_THROWS_AS(validate_envelope(u.with_envelope(TailEnvelope{Expression::parse("x"), 0.0, std::nullopt, 0.0})),
                  ConfigError);
  CHECK(envelope_tail_sup(inv, 0.0, *seq) == doctest::Approx(1.0 / 17.0));
}
