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

#include "puoc/point_set.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "puoc/core_math.hpp"

namespace puoc {

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
}

PointSet::PointSet(std::size_t dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {
  if (dim == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
  if (values_.size() % dim != 0)
    throw std::invalid_argument("PointSet: value count not a multiple of dim");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("PointSet: non-finite coordinate");
}

void PointSet::push_back(std::span<const double> point) {
  if (point.size() != dim_)
    throw std::invalid_argument("PointSet: dimension mismatch");
  for (double v : point)
    if (!std::isfinite(v))
      throw std::invalid_argument("PointSet: non-finite coordinate");
  values_.insert(values_.end(), point.begin(), point.end());
}

void PointSet::moments(std::vector<double>& mean, std::vector<double>& sd) const {
  const std::size_t n = size();
  mean.assign(dim_, 0.0);
  sd.assign(dim_, 1.0);
  if (n == 0) return;
  std::vector<double> column(n);
  for (std::size_t d = 0; d < dim_; ++d) {
    for (std::size_t i = 0; i < n; ++i) column[i] = values_[i * dim_ + d];
    mean[d] = pairwise_sum(column) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      double c = column[i] - mean[d];
      column[i] = c * c;
    }
    double var = pairwise_sum(column) / static_cast<double>(n);
    double s = std::sqrt(var);
    sd[d] = s < 1e-12 ? 1.0 : s;
  }
}

}  // namespace puoc
