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

#include "puoc/core_math.hpp"

#include <cmath>
#include <stdexcept>

namespace puoc {

namespace {

double sigma(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

struct Branch {
  double value;
  double slope;
};

// max of affine branches; the gradient at a kink is the right-hand
// derivative, i.e. the steepest slope among the branches attaining the max.
double max_value(std::span<const Branch> branches) {
  double v = branches[0].value;
  for (const Branch& b : branches)
    if (b.value > v) v = b.value;
  return v;
}

double right_slope(std::span<const Branch> branches) {
  const double v = max_value(branches);
  bool first = true;
  double s = 0.0;
  for (const Branch& b : branches) {
    if (b.value == v && (first || b.slope > s)) {
      s = b.slope;
      first = false;
    }
  }
  return s;
}

}  // namespace

double loss_eval(Loss kind, int y, double t) {
  const double yd = static_cast<double>(y);
  switch (kind) {
    case Loss::Hinge: {
      const Branch b[] = {{0.0, 0.0}, {1.0 - yd * t, -yd}};
      return max_value(b);
    }
    case Loss::DoubleHinge: {
      const Branch b[] = {{-2.0 * yd * t, -2.0 * yd},
                          {0.0, 0.0},
                          {1.0 - yd * t, -yd}};
      return max_value(b);
    }
    case Loss::Sigmoid:
      return sigma(-yd * t);
    case Loss::Logistic: {
      const double u = yd * t;
      return u > 0.0 ? std::log1p(std::exp(-u)) : -u + std::log1p(std::exp(u));
    }
  }
  throw std::logic_error("loss_eval: unknown loss kind");
}

double loss_grad(Loss kind, int y, double t) {
  const double yd = static_cast<double>(y);
  switch (kind) {
    case Loss::Hinge: {
      const Branch b[] = {{0.0, 0.0}, {1.0 - yd * t, -yd}};
      return right_slope(b);
    }
    case Loss::DoubleHinge: {
      const Branch b[] = {{-2.0 * yd * t, -2.0 * yd},
                          {0.0, 0.0},
                          {1.0 - yd * t, -yd}};
      return right_slope(b);
    }
    case Loss::Sigmoid: {
      const double u = yd * t;
      return -yd * sigma(u) * sigma(-u);
    }
    case Loss::Logistic:
      return -yd * sigma(-yd * t);
  }
  throw std::logic_error("loss_grad: unknown loss kind");
}

Kernel Kernel::rbf(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("Kernel::rbf: gamma must be positive");
  return Kernel{Type::Rbf, gamma};
}

double kernel_eval(const Kernel& k, std::span<const double> a,
                   std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  if (k.type == Kernel::Type::Linear) {
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot;
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    d2 += d * d;
  }
  return std::exp(-k.gamma * d2);
}

std::vector<double> kernel_matrix_serial(const Kernel& k, const PointSet& a,
                                         const PointSet& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("kernel_matrix: dimension mismatch");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<double> m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      m[i * nb + j] = kernel_eval(k, a[i], b[j]);
  return m;
}

std::vector<double> kernel_matrix(const Kernel& k, const PointSet& a,
                                  const PointSet& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("kernel_matrix: dimension mismatch");
  const std::size_t na = a.size(), nb = b.size();
  std::vector<double> m(na * nb);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(na); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      m[static_cast<std::size_t>(i) * nb + j] =
          kernel_eval(k, a[static_cast<std::size_t>(i)], b[j]);
  return m;
}

namespace {

constexpr std::size_t kSumBlock = 64;

double pairwise_range(const double* p, std::size_t n) {
  if (n <= kSumBlock) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t mid = n / 2;
  return pairwise_range(p, mid) + pairwise_range(p + mid, n - mid);
}

// Leaf ranges of the pairwise tree at a fixed depth, left to right.
void collect_leaves(const double* p, std::size_t n, int depth,
                    std::vector<std::pair<const double*, std::size_t>>& out) {
  if (depth == 0) {
    out.emplace_back(p, n);
    return;
  }
  const std::size_t mid = n / 2;
  collect_leaves(p, mid, depth - 1, out);
  collect_leaves(p + mid, n - mid, depth - 1, out);
}

double combine(const std::vector<double>& partials, std::size_t lo,
               std::size_t hi) {
  if (hi - lo == 1) return partials[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return combine(partials, lo, mid) + combine(partials, mid, hi);
}

}  // namespace

double pairwise_sum_serial(std::span<const double> v) {
  return pairwise_range(v.data(), v.size());
}

double pairwise_sum(std::span<const double> v) {
  constexpr std::size_t kParallelCutoff = 1 << 16;
  if (v.size() < kParallelCutoff) return pairwise_range(v.data(), v.size());

  constexpr int kDepth = 6;  // 64 subtrees
  std::vector<std::pair<const double*, std::size_t>> leaves;
  leaves.reserve(1u << kDepth);
  collect_leaves(v.data(), v.size(), kDepth, leaves);

  std::vector<double> partials(leaves.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(leaves.size()); ++i)
    partials[static_cast<std::size_t>(i)] =
        pairwise_range(leaves[static_cast<std::size_t>(i)].first,
                       leaves[static_cast<std::size_t>(i)].second);
  return combine(partials, 0, partials.size());
}

ClassPrior::ClassPrior(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0))
    throw std::invalid_argument("ClassPrior: alpha must be in (0, 1]");
}

double mean_loss(Loss loss, int y, std::span<const double> scores) {
  if (scores.empty())
    throw std::invalid_argument("mean_loss: empty score list");
  std::vector<double> buf(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    buf[i] = loss_eval(loss, y, scores[i]);
  return pairwise_sum(buf) / static_cast<double>(buf.size());
}

double risk_pn(Loss loss, std::span<const double> scores_p,
               std::span<const double> scores_n, ClassPrior alpha) {
  const double a = alpha.value();
  return a * mean_loss(loss, +1, scores_p) +
         (1.0 - a) * mean_loss(loss, -1, scores_n);
}

RiskBreakdown risk_pu_unbiased(Loss loss, std::span<const double> scores_p,
                               std::span<const double> scores_u,
                               ClassPrior alpha) {
  const double a = alpha.value();
  RiskBreakdown r;
  r.pos_term = a * mean_loss(loss, +1, scores_p);
  r.neg_term_raw =
      mean_loss(loss, -1, scores_u) - a * mean_loss(loss, -1, scores_p);
  r.total = r.pos_term + r.neg_term_raw;
  r.clamped = false;
  return r;
}

RiskBreakdown risk_nn(Loss loss, std::span<const double> scores_p,
                      std::span<const double> scores_u, ClassPrior alpha) {
  RiskBreakdown r = risk_pu_unbiased(loss, scores_p, scores_u, alpha);
  r.clamped = r.neg_term_raw < 0.0;
  r.total = r.pos_term + (r.clamped ? 0.0 : r.neg_term_raw);
  return r;
}

}  // namespace puoc
