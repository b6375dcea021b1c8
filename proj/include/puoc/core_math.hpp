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

#ifndef PUOC_CORE_MATH_HPP
#define PUOC_CORE_MATH_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "puoc/point_set.hpp"

namespace puoc {

// ---------------------------------------------------------------------------
// Losses
// ---------------------------------------------------------------------------

/// Margin losses on class codes y in {+1, -1}:
///   Hinge(y,t)       = max(0, 1 - y*t)
///   DoubleHinge(y,t) = max(-2*y*t, Hinge(y,t))
///   Sigmoid(y,t)     = 1 / (1 + exp(y*t))
///   Logistic(y,t)    = log(1 + exp(-y*t))
enum class Loss { Hinge, DoubleHinge, Sigmoid, Logistic };

double loss_eval(Loss kind, int y, double t);

/// d loss / dt. At the kinks of the piecewise-linear losses this returns the
/// right-hand derivative (the steepest slope among active branches).
double loss_grad(Loss kind, int y, double t);

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

struct Kernel {
  enum class Type { Linear, Rbf };
  Type type = Type::Linear;
  double gamma = 1.0;  // Rbf only; must be > 0

  static Kernel linear() { return Kernel{Type::Linear, 0.0}; }
  static Kernel rbf(double gamma);
};

/// K(a, b). Linear: dot(a,b). Rbf: exp(-gamma * ||a-b||^2).
/// Throws std::invalid_argument on dimension mismatch.
double kernel_eval(const Kernel& k, std::span<const double> a,
                   std::span<const double> b);

/// Row-major |a| x |b| Gram matrix. The parallel version partitions rows
/// across OpenMP threads; both produce bitwise-identical output.
std::vector<double> kernel_matrix(const Kernel& k, const PointSet& a,
                                  const PointSet& b);
std::vector<double> kernel_matrix_serial(const Kernel& k, const PointSet& a,
                                         const PointSet& b);

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

/// Pairwise (cascade) summation over a fixed binary tree: split at n/2 down
/// to blocks of 64. The parallel version evaluates independent subtrees on
/// OpenMP threads and combines them in tree order, so serial and parallel
/// results are bitwise identical.
double pairwise_sum_serial(std::span<const double> v);
double pairwise_sum(std::span<const double> v);

// ---------------------------------------------------------------------------
// Risk estimators
// ---------------------------------------------------------------------------

/// Mixture proportion of positives in the unlabeled distribution,
/// constrained to (0, 1].
class ClassPrior {
 public:
  explicit ClassPrior(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Decomposed empirical PU risk.
///   pos_term     = alpha * mean loss(+1, scores_p)
///   neg_term_raw = mean loss(-1, scores_u) - alpha * mean loss(-1, scores_p)
/// Unbiased estimate: total = pos_term + neg_term_raw, clamped = false.
/// Non-negative estimate: total = pos_term + max(0, neg_term_raw),
/// clamped = (neg_term_raw < 0).
struct RiskBreakdown {
  double total = 0.0;
  double pos_term = 0.0;
  double neg_term_raw = 0.0;
  bool clamped = false;
};

/// Supervised risk: alpha * mean loss(+1, scores_p)
///                + (1 - alpha) * mean loss(-1, scores_n).
double risk_pn(Loss loss, std::span<const double> scores_p,
               std::span<const double> scores_n, ClassPrior alpha);

RiskBreakdown risk_pu_unbiased(Loss loss, std::span<const double> scores_p,
                               std::span<const double> scores_u,
                               ClassPrior alpha);

RiskBreakdown risk_nn(Loss loss, std::span<const double> scores_p,
                      std::span<const double> scores_u, ClassPrior alpha);

/// mean of loss(y, t) over t in scores, via pairwise summation.
double mean_loss(Loss loss, int y, std::span<const double> scores);

}  // namespace puoc

#endif  // PUOC_CORE_MATH_HPP
