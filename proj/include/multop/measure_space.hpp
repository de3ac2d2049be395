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

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace multop {

enum class SpaceMode { Finite, Sequence };

/// Weights w_k of the k-th atom (k = 1, 2, ...) of a sequence-mode space.
struct WeightRule {
  enum class Kind {
    Geometric,  // w_k = scale * ratio^k, 0 < ratio < 1
    Power,      // w_k = scale * k^(-exponent), exponent > 1
  };
  Kind kind = Kind::Geometric;
  double scale = 1.0;
  double parameter = 0.5;

  double weight(std::size_t k) const;
  /// Upper bound on sum_{k > truncation} w_k (exact for the geometric rule).
  double tail_mass(std::size_t truncation) const;
};

/// A sigma-finite measure space modelled as weighted atoms. Each atom carries a
/// real coordinate consumed by the symbol expression language.
///
/// Finite mode holds an explicit list of atoms. Sequence mode models the atoms
/// k = 1, 2, ... with coordinate k and weights from a WeightRule; only the first
/// `truncation` atoms are materialized and the rest are the tail.
///
/// Atoms of weight zero are allowed. Everything "almost everywhere" in the
/// library means "on every atom of positive weight".
class MeasureSpace {
 public:
  static MeasureSpace finite(std::vector<double> coordinates, std::vector<double> weights,
                             bool nonatomic = false);
  static MeasureSpace sequence(WeightRule rule, std::size_t truncation);

  SpaceMode mode() const { return mode_; }
  bool is_finite() const { return mode_ == SpaceMode::Finite; }
  /// Number of materialized atoms.
  std::size_t size() const { return weights_.size(); }
  /// Coordinate of atom i. Sequence mode answers for any i, including the tail.
  double coordinate(std::size_t i) const;
  /// Weight of atom i. Sequence mode answers for any i, including the tail.
  double weight(std::size_t i) const;
  bool positive(std::size_t i) const { return weight(i) > 0.0; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& coordinates() const { return coordinates_; }
  bool nonatomic() const { return nonatomic_; }
  const WeightRule& rule() const { return rule_; }
  /// Measure of the unmaterialized tail; 0 in finite mode.
  double tail_mass() const;
  /// Materialized mass plus the tail mass.
  double total_measure() const;

 private:
  MeasureSpace() = default;

  SpaceMode mode_ = SpaceMode::Finite;
  std::vector<double> coordinates_;
  std::vector<double> weights_;
  bool nonatomic_ = false;
  WeightRule rule_;
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

SpacePtr make_space(MeasureSpace space);

/// A measurable set: a membership mask over the materialized atoms, plus (in
/// sequence mode) whether the whole tail belongs to the set.
class MeasurableSet {
 public:
  MeasurableSet(SpacePtr space, std::vector<bool> mask, bool includes_tail = false);
  static MeasurableSet empty(SpacePtr space);
  static MeasurableSet full(SpacePtr space);
  static MeasurableSet singleton(SpacePtr space, std::size_t atom);
  /// Members are the materialized atoms satisfying the predicate.
  static MeasurableSet where(SpacePtr space, const std::function<bool(std::size_t)>& predicate,
                             bool includes_tail = false);

  const SpacePtr& space() const { return space_; }
  bool contains(std::size_t atom) const { return mask_.at(atom); }
  bool includes_tail() const { return includes_tail_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool subset_of(const MeasurableSet& other) const;
  bool disjoint_from(const MeasurableSet& other) const;
  MeasurableSet united(const MeasurableSet& other) const;

 private:
  SpacePtr space_;
  std::vector<bool> mask_;
  bool includes_tail_ = false;
};

/// Sum of member weights, plus the tail mass when the tail is included.
double measure_of(const MeasurableSet& set);

/// Splits every atom into `factor` equal-weight children sharing its coordinate.
/// Finite mode only.
MeasureSpace refine(const MeasureSpace& space, int factor);

}  // namespace multop
