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

// Seeded generators for probe functions and random symbols. Everything here is
// deterministic for a given seed.

#include <cstdint>
#include <random>

#include "multop/matrix.hpp"

namespace multop {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform on the square [-1, 1] x [-1, 1].
inline Complex random_complex(Rng& rng) { return {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}; }

inline CVector random_vector(Rng& rng, int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_complex(rng);
  return v;
}

inline CMatrix random_matrix(Rng& rng, int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  return m;
}

}  // namespace multop
