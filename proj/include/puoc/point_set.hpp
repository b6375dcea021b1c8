// Copyright 2026 The puoc Authors
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

#ifndef PUOC_POINT_SET_HPP
#define PUOC_POINT_SET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace puoc {

/// Dense row-major collection of points sharing one dimension.
/// Every stored coordinate is finite; push_back rejects NaN/Inf.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, std::vector<double> values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : values_.size() / dim_; }
  bool empty() const { return values_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  void push_back(std::span<const double> point);
  void reserve(std::size_t n) { values_.reserve(n * dim_); }

  const std::vector<double>& values() const { return values_; }

  /// Per-dimension mean and standard deviation of the stored points.
  /// Standard deviations below 1e-12 are reported as 1 so that
  /// standardization never divides by (near) zero.
  void moments(std::vector<double>& mean, std::vector<double>& sd) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

/// What a trainer is allowed to see: labeled positives plus the unlabeled
/// mixture. Deliberately has no latent-label or true-prior members.
struct TrainView {
  const PointSet* positives = nullptr;
  const PointSet* unlabeled = nullptr;

  std::size_t dim() const { return positives->dim(); }
};

/// Case-control PU sample: labeled positives X_p and unlabeled mixture X_u.
/// latent_labels (1 = latent positive) and alpha_true exist for evaluation
/// only; trainers consume a TrainView which excludes them structurally.
struct PuDataset {
  PointSet positive;
  PointSet unlabeled;
  std::optional<std::vector<std::uint8_t>> latent_labels;
  std::optional<double> alpha_true;

  std::size_t dim() const { return positive.dim(); }

  TrainView train_view() const { return TrainView{&positive, &unlabeled}; }
};

}  // namespace puoc

#endif  // PUOC_POINT_SET_HPP
