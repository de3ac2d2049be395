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

#include "multop/errors.hpp"
#include "multop/function_space.hpp"
#include "multop/measure_space.hpp"
#include "support/oracles.hpp"

using namespace multop;
using multop::testing::finite_space;

TEST_CASE("measure_of sums member weights") {
  const SpacePtr s = finite_space({0.5, 0.25, 0.25});
  CHECK(measure_of(MeasurableSet::empty(s)) == 0.0);
  CHECK(measure_of(MeasurableSet::full(s)) == 1.0);
  CHECK(measure_of(MeasurableSet::singleton(s, 0)) == 0.5);
}

TEST_CASE("indicator functions") {
  const SpacePtr s = finite_space({0.5, 0.25, 0.25});
  CVector z(2);
  z << 1.0, 0.0;
  const VectorFunction none = indicator(MeasurableSet::empty(s), z);
  for (std::size_t i = 0; i < 3; ++i) CHECK(none[i].isZero(0.0));
  const VectorFunction all = indicator(MeasurableSet::full(s), z);
  for (std::size_t i = 0; i < 3; ++i) CHECK(all[i] == z);
  const VectorFunction one = indicator(MeasurableSet::singleton(s, 1), z);
  CHECK(one[0].isZero(0.0));
  CHECK(one[1] == z);
  CHECK(one[2].isZero(0.0));
}

TEST_CASE("refine splits weights equally") {
  const MeasureSpace quarter = refine(*finite_space({1.0}), 4);
  CHECK(quarter.weights() == std::vector<double>{0.25, 0.25, 0.25, 0.25});

  const SpacePtr s = finite_space({0.6, 0.4}, {3.0, 7.0});
  const MeasureSpace same = refine(*s, 1);
  CHECK(same.weights() == s->weights());
  CHECK(same.coordinates() == s->coordinates());

  const MeasureSpace half = refine(*s, 2);
  CHECK(half.weights() == std::vector<double>{0.3, 0.3, 0.2, 0.2});
  CHECK(half.coordinates() == std::vector<double>{3.0, 3.0, 7.0, 7.0});
  CHECK(half.total_measure() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("measure_of is additive over disjoint masks") {
  Rng rng(3);
  for (std::size_t atoms = 1; atoms <= 12; ++atoms) {
    const SpacePtr s = multop::testing::random_finite_space(rng, atoms);
    const double total = s->total_measure();
    // Every mask, split against one fixed random mask.
    std::vector<bool> pivot(atoms);
    for (std::size_t i = 0; i < atoms; ++i) pivot[i] = uniform(rng, 0, 1) < 0.5;
    for (unsigned long bits = 0; bits < (1UL << atoms); ++bits) {
      std::vector<bool> a(atoms), b(atoms);
      for (std::size_t i = 0; i < atoms; ++i) {
        const bool in = (bits >> i) & 1UL;
        a[i] = in && pivot[i];
        b[i] = in && !pivot[i];
      }
      const MeasurableSet ea(s, a), eb(s, b);
      REQUIRE(ea.disjoint_from(eb));
      const double joint = measure_of(ea.united(eb));
      CHECK(std::abs(joint - measure_of(ea) - measure_of(eb)) <= 1e-15 * total);
      CHECK(joint >= 0.0);
      CHECK(joint <= total * (1 + 1e-15));
    }
  }
}

TEST_CASE("refine preserves total measure") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const SpacePtr s = multop::testing::random_finite_space(rng, 1 + trial % 17);
    for (int factor : {1, 2, 3, 4, 7}) {
      const double fine = refine(*s, factor).total_measure();
      CHECK(std::abs(fine - s->total_measure()) <= 1e-15 * s->total_measure() * 8);
    }
  }
}

TEST_CASE("space validation") {
  CHECK_THROWS_AS(MeasureSpace::finite({}, {}), Error);
  CHECK_THROWS_AS(MeasureSpace::finite({1.0}, {-1.0}), Error);
  CHECK_THROWS_AS(MeasureSpace::finite({NAN}, {1.0}), Error);
  CHECK_NOTHROW(MeasureSpace::finite({1.0, 2.0}, {0.0, 1.0}));
  CHECK_THROWS_AS(refine(MeasureSpace::sequence(WeightRule{}, 4), 2), DomainError);
}

TEST_CASE("sequence spaces") {
  const MeasureSpace geo = MeasureSpace::sequence(WeightRule{WeightRule::Kind::Geometric, 1.0, 0.5}, 10);
  CHECK(geo.size() == 10);
  CHECK(geo.coordinate(0) == 1.0);
  CHECK(geo.coordinate(14) == 15.0);
  CHECK(geo.weight(0) == 0.5);
  CHECK(geo.tail_mass() == doctest::Approx(std::ldexp(1.0, -10)).epsilon(1e-14));
  CHECK(geo.total_measure() == doctest::Approx(1.0).epsilon(1e-14));

  const MeasureSpace pow = MeasureSpace::sequence(WeightRule{WeightRule::Kind::Power, 1.0, 2.0}, 100);
  CHECK(std::isfinite(pow.tail_mass()));
  CHECK(pow.tail_mass() >= 0.0);
  // The bound dominates a long partial sum of the true tail.
  double partial = 0.0;
  for (std::size_t k = 101; k <= 200000; ++k) partial += 1.0 / (static_cast<double>(k) * k);
  CHECK(pow.tail_mass() >= partial);

  const SpacePtr s = make_space(geo);
  CHECK(measure_of(MeasurableSet::full(s)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(measure_of(MeasurableSet(s, std::vector<bool>(10, false), true)) == geo.tail_mass());
}
