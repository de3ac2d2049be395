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

#include "multop/measure_space.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "multop/errors.hpp"

namespace multop {

double WeightRule::weight(std::size_t k) const {
  const double kd = static_cast<double>(k);
  switch (kind) {
    case Kind::Geometric:
      return scale * std::pow(parameter, kd);
    case Kind::Power:
      return scale * std::pow(kd, -parameter);
  }
  return 0.0;
}

double WeightRule::tail_mass(std::size_t truncation) const {
  const double kd = static_cast<double>(truncation);
  switch (kind) {
    case Kind::Geometric:
      return scale * std::pow(parameter, kd + 1.0) / (1.0 - parameter);
    case Kind::Power:
      // sum_{k>K} k^-s <= int_K^inf t^-s dt
      if (truncation == 0) return std::numeric_limits<double>::infinity();
      return scale * std::pow(kd, 1.0 - parameter) / (parameter - 1.0);
  }
  return 0.0;
}

MeasureSpace MeasureSpace::finite(std::vector<double> coordinates, std::vector<double> weights,
                                  bool nonatomic) {
  if (weights.empty()) throw DomainError("finite measure space needs at least one atom");
  if (coordinates.size() != weights.size())
    throw DomainError("coordinate and weight lists differ in length");
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0) throw DomainError("atom weights must be finite and >= 0");
  for (double x : coordinates)
    if (!std::isfinite(x)) throw DomainError("atom coordinates must be finite");
  MeasureSpace s;
  s.mode_ = SpaceMode::Finite;
  s.coordinates_ = std::move(coordinates);
  s.weights_ = std::move(weights);
  s.nonatomic_ = nonatomic;
  return s;
}

MeasureSpace MeasureSpace::sequence(WeightRule rule, std::size_t truncation) {
  if (truncation == 0) throw DomainError("sequence space needs a positive truncation index");
  if (!(rule.scale > 0.0) || !std::isfinite(rule.scale))
    throw DomainError("weight rule scale must be positive");
  if (rule.kind == WeightRule::Kind::Geometric && !(rule.parameter > 0.0 && rule.parameter < 1.0))
    throw DomainError("geometric weight ratio must lie in (0, 1)");
  if (rule.kind == WeightRule::Kind::Power && !(rule.parameter > 1.0 && std::isfinite(rule.parameter)))
    throw DomainError("power weight exponent must exceed 1");
  MeasureSpace s;
  s.mode_ = SpaceMode::Sequence;
  s.rule_ = rule;
  s.coordinates_.resize(truncation);
  s.weights_.resize(truncation);
  for (std::size_t i = 0; i < truncation; ++i) {
    s.coordinates_[i] = static_cast<double>(i + 1);
    s.weights_[i] = rule.weight(i + 1);
  }
  return s;
}

double MeasureSpace::coordinate(std::size_t i) const {
  if (i < coordinates_.size()) return coordinates_[i];
  if (mode_ == SpaceMode::Sequence) return static_cast<double>(i + 1);
  throw DomainError("atom index out of range");
}

double MeasureSpace::weight(std::size_t i) const {
  if (i < weights_.size()) return weights_[i];
  if (mode_ == SpaceMode::Sequence) return rule_.weight(i + 1);
  throw DomainError("atom index out of range");
}

double MeasureSpace::tail_mass() const {
  return mode_ == SpaceMode::Sequence ? rule_.tail_mass(weights_.size()) : 0.0;
}

double MeasureSpace::total_measure() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0) + tail_mass();
}

SpacePtr make_space(MeasureSpace space) {
  return std::make_shared<const MeasureSpace>(std::move(space));
}

MeasurableSet::MeasurableSet(SpacePtr space, std::vector<bool> mask, bool includes_tail)
    : space_(std::move(space)), mask_(std::move(mask)), includes_tail_(includes_tail) {
  if (!space_) throw DomainError("measurable set needs a space");
  if (mask_.size() != space_->size()) throw DomainError("set mask length differs from atom count");
  if (includes_tail_ && space_->is_finite())
    throw DomainError("finite spaces have no tail");
}

MeasurableSet MeasurableSet::empty(SpacePtr space) {
  const std::size_t n = space->size();
  return MeasurableSet(std::move(space), std::vector<bool>(n, false));
}

MeasurableSet MeasurableSet::full(SpacePtr space) {
  const std::size_t n = space->size();
  const bool tail = !space->is_finite();
  return MeasurableSet(std::move(space), std::vector<bool>(n, true), tail);
}

MeasurableSet MeasurableSet::singleton(SpacePtr space, std::size_t atom) {
  std::vector<bool> mask(space->size(), false);
  mask.at(atom) = true;
  return MeasurableSet(std::move(space), std::move(mask));
}

MeasurableSet MeasurableSet::where(SpacePtr space,
                                   const std::function<bool(std::size_t)>& predicate,
                                   bool includes_tail) {
  std::vector<bool> mask(space->size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = predicate(i);
  return MeasurableSet(std::move(space), std::move(mask), includes_tail);
}

bool MeasurableSet::subset_of(const MeasurableSet& other) const {
  if (includes_tail_ && !other.includes_tail_) return false;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_.at(i)) return false;
  return true;
}

bool MeasurableSet::disjoint_from(const MeasurableSet& other) const {
  if (includes_tail_ && other.includes_tail_) return false;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && other.mask_.at(i)) return false;
  return true;
}

MeasurableSet MeasurableSet::united(const MeasurableSet& other) const {
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask_[i] || other.mask_.at(i);
  return MeasurableSet(space_, std::move(mask), includes_tail_ || other.includes_tail_);
}

double measure_of(const MeasurableSet& set) {
  double total = 0.0;
  const auto& w = set.space()->weights();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (set.contains(i)) total += w[i];
  if (set.includes_tail()) total += set.space()->tail_mass();
  return total;
}

MeasureSpace refine(const MeasureSpace& space, int factor) {
  if (!space.is_finite()) throw DomainError("refine: sequence mode is not supported");
  if (factor < 1) throw DomainError("refine: factor must be a positive integer");
  std::vector<double> coords, weights;
  coords.reserve(space.size() * static_cast<std::size_t>(factor));
  weights.reserve(coords.capacity());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double child = space.weights()[i] / factor;
    for (int c = 0; c < factor; ++c) {
      coords.push_back(space.coordinates()[i]);
      weights.push_back(child);
    }
  }
  return MeasureSpace::finite(std::move(coords), std::move(weights), space.nonatomic());
}

}  // namespace multop
