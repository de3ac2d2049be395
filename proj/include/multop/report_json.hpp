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

// JSON views of the analyzer and solver reports. Complex numbers become
// {"re": ..., "im": ...}; infinities become "inf" / "-inf"; verdicts are
// booleans or the markers "not-applicable" / "undetermined".

#include <json.hpp>

#include "multop/multiplication_operator.hpp"
#include "multop/semigroup.hpp"

namespace multop {

using Json = nlohmann::ordered_json;

Json to_json_real(double v);
Json to_json(Complex z);
Json to_json(Verdict v);
Json to_json(const PointSet& s);
Json to_json(const OperatorReport& r);
Json to_json(const GenerationResult& g);
Json to_json(const IntegratedCheck& c);
Json to_json(const StabilityFit& f);
Json to_json(const SemigroupReport& r);
Json to_json(const LaplaceCheck& c);

}  // namespace multop
