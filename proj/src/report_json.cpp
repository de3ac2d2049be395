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

#include "multop/report_json.hpp"

#include <cmath>

#include "multop/errors.hpp"

namespace multop {

Json to_json_real(double v) {
  if (std::isnan(v)) throw NumericError("refusing to serialize NaN");
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json to_json(Complex z) {
  Json j;
  j["re"] = to_json_real(z.real());
  j["im"] = to_json_real(z.imag());
  return j;
}

Json to_json(Verdict v) {
  if (v == Verdict::True) return true;
  if (v == Verdict::False) return false;
  return to_string(v);
}

Json to_json(const PointSet& s) {
  Json j;
  Json points = Json::array();
  for (const Complex& z : s.points) points.push_back(to_json(z));
  j["points"] = std::move(points);
  Json limits = Json::array();
  for (const Complex& z : s.limit_points) limits.push_back(to_json(z));
  j["limit_points"] = std::move(limits);
  j["tail"] = to_string(s.tail);
  if (s.tail == PointSet::Tail::Disk) j["tail_radius"] = to_json_real(s.tail_radius);
  return j;
}

Json to_json(const OperatorReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["operator_norm"] = to_json_real(r.operator_norm);
  j["operator_norm_least_bound"] = to_json_real(r.operator_norm_least_bound);
  j["essential_range"] = r.essential_range ? to_json(*r.essential_range) : Json("not-applicable");
  j["spectrum"] = to_json(r.spectrum);
  j["bounded"] = to_json(r.bounded);
  j["invertible"] = to_json(r.invertible);
  j["delta_invertibility"] = to_json_real(r.delta_invertibility);
  j["closed_range"] = to_json(r.closed_range);
  j["delta_closed_range"] = r.delta_closed_range ? to_json_real(*r.delta_closed_range) : Json("not-applicable");
  j["compact"] = to_json(r.compact);
  Json levels = Json::array();
  for (const LevelSet& l : r.compactness.levels) {
    Json lj;
    lj["eps"] = to_json_real(l.eps);
    lj["finite"] = l.finite;
    lj["size_bound"] = to_json_real(l.size_bound);
    levels.push_back(std::move(lj));
  }
  j["compact_levels"] = std::move(levels);
  j["fredholm"] = to_json(r.fredholm);
  if (r.fredholm_detail) {
    const FredholmResult& f = *r.fredholm_detail;
    Json fj;
    fj["invertible"] = f.invertible;
    fj["lower_bound_everywhere"] = f.lower_bound_everywhere;
    fj["closed_range_full_support"] = f.closed_range_full_support;
    fj["min_modulus"] = to_json_real(f.min_modulus);
    fj["agree"] = f.agree;
    fj["refine_stable"] = f.refine_stable;
    j["fredholm_detail"] = std::move(fj);
  }
  Json notes = Json::array();
  for (const std::string& n : r.notes) notes.push_back(n);
  if (!r.compactness.note.empty()) notes.push_back(r.compactness.note);
  j["notes"] = std::move(notes);
  return j;
}

Json to_json(const GenerationResult& g) {
  Json j;
  j["generates_c0"] = g.generates_c0;
  j["c"] = to_json_real(g.c);
  j["tail_certified"] = g.tail_certified;
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

Json to_json(const IntegratedCheck& c) {
  Json j;
  j["generator"] = c.generator;
  j["w_star"] = to_json_real(c.w);
  j["half_plane"] = c.half_plane;
  j["w_from_spectrum"] = to_json_real(c.w_from_spectrum);
  j["agree"] = c.agree;
  j["resolvent_nonempty"] = c.resolvent_nonempty;
  return j;
}

Json to_json(const StabilityFit& f) {
  Json j;
  j["w_star"] = to_json_real(f.w_star);
  j["epsilon"] = to_json_real(f.epsilon);
  j["fitted_m"] = to_json_real(f.fitted_m);
  return j;
}

Json to_json(const SemigroupReport& r) {
  Json j;
  j["generation"] = to_json(r.generation);
  j["integrated"] = to_json(r.integrated);
  j["m"] = r.m;
  j["stability"] = r.stability ? to_json(*r.stability) : Json("not-applicable");
  return j;
}

Json to_json(const LaplaceCheck& c) {
  Json j;
  j["lambda"] = to_json(c.lambda);
  j["m"] = c.m;
  j["t_max"] = to_json_real(c.t_max);
  j["w_star"] = to_json_real(c.w_star);
  j["relative_error"] = to_json_real(c.relative_error);
  return j;
}

}  // namespace multop
