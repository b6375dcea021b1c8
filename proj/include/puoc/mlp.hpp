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

#ifndef PUOC_MLP_HPP
#define PUOC_MLP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace puoc {

struct MlpSpec {
  enum class Activation { Tanh, Relu };

  std::vector<std::size_t> layer_sizes;  // input dim, hidden..., 1
  Activation activation = Activation::Tanh;

  void validate() const;  // throws unless sizes are [d, ..., 1] with d >= 1
};

/// Fully-connected scalar-output network with hand-written backprop.
/// Parameters live in one flat vector (per layer: row-major weights, then
/// biases) so finite-difference checks and SGD updates stay simple.
class MlpNet {
 public:
  explicit MlpNet(MlpSpec spec);

  /// Weights uniform on +-sqrt(6 / (fan_in + fan_out)), biases zero,
  /// drawn in a fixed order from the seeded generator.
  static MlpNet glorot_init(MlpSpec spec, std::uint64_t seed);

  const MlpSpec& spec() const { return spec_; }
  std::size_t input_dim() const { return spec_.layer_sizes.front(); }
  std::size_t param_count() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

  /// Layer activations cached during a forward pass for backprop.
  struct Trace {
    std::vector<std::vector<double>> pre;  // pre-activation per layer
    std::vector<std::vector<double>> act;  // post-activation per layer
  };

  double forward(std::span<const double> x) const;
  double forward(std::span<const double> x, Trace& trace) const;

  /// Accumulates d(dscore * score(x)) / dparams into grad (size
  /// param_count). trace must come from forward() on the same x.
  void backward(std::span<const double> x, const Trace& trace, double dscore,
                std::span<double> grad) const;

 private:
  MlpSpec spec_;
  std::vector<double> params_;
  std::vector<std::size_t> weight_offset_;  // per layer
  std::vector<std::size_t> bias_offset_;
};

}  // namespace puoc

#endif  // PUOC_MLP_HPP
