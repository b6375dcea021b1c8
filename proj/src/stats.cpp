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

#include "puoc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace puoc {

namespace detail {

std::vector<double> midranks(std::span<const double> values,
                             double* tie_correction_sum) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  std::vector<double> ranks(n);
  double ties = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);  // 1-based midrank
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  if (tie_correction_sum) *tie_correction_sum = ties;
  return ranks;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double mw_exact_p(double u, std::size_t n1, std::size_t n2, Alternative alt) {
  // Null counts by the standard recurrence on the pooled maximum:
  //   c(m, k, v) = c(m-1, k, v-k) + c(m, k-1, v)
  // (largest element from sample a beats all k b-elements, or from b).
  const std::size_t umax = n1 * n2;
  std::vector<std::vector<double>> counts(n1 + 1,
                                          std::vector<double>(umax + 1, 0.0));
  for (std::size_t m = 0; m <= n1; ++m) counts[m][0] = 1.0;  // k = 0
  for (std::size_t k = 1; k <= n2; ++k) {
    std::vector<std::vector<double>> next(n1 + 1,
                                          std::vector<double>(umax + 1, 0.0));
    next[0][0] = 1.0;
    for (std::size_t m = 1; m <= n1; ++m)
      for (std::size_t v = 0; v <= umax; ++v) {
        double c = counts[m][v];
        if (v >= k) c += next[m - 1][v - k];
        next[m][v] = c;
      }
    counts = std::move(next);
  }
  const std::vector<double>& dist = counts[n1];
  const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
  const std::size_t ui = static_cast<std::size_t>(std::llround(u));
  double below = 0.0, above = 0.0;
  for (std::size_t k = 0; k <= umax; ++k) {
    if (k <= ui) below += dist[k];
    if (k >= ui) above += dist[k];
  }
  switch (alt) {
    case Alternative::Less:
      return below / total;
    case Alternative::Greater:
      return above / total;
    case Alternative::TwoSided:
      return std::min(1.0, 2.0 * std::min(below, above) / total);
  }
  throw std::logic_error("mw_exact_p: bad alternative");
}

double mw_normal_p(double u, std::size_t n1, std::size_t n2,
                   double tie_correction_sum, Alternative alt) {
  const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2);
  const double n = dn1 + dn2;
  const double mu = dn1 * dn2 / 2.0;
  double var = dn1 * dn2 / 12.0 *
               ((n + 1.0) - tie_correction_sum / (n * (n - 1.0)));
  if (var <= 0.0) return 1.0;  // all values tied; statistic is at the center
  const double sd = std::sqrt(var);
  const double p_greater = 1.0 - normal_cdf((u - mu - 0.5) / sd);
  const double p_less = normal_cdf((u - mu + 0.5) / sd);
  switch (alt) {
    case Alternative::Less:
      return p_less;
    case Alternative::Greater:
      return p_greater;
    case Alternative::TwoSided:
      return std::min(1.0, 2.0 * std::min(p_less, p_greater));
  }
  throw std::logic_error("mw_normal_p: bad alternative");
}

double wilcoxon_exact_p(double w_plus, std::span<const double> abs_ranks,
                        Alternative alt) {
  const std::size_t n = abs_ranks.size();
  const std::size_t patterns = static_cast<std::size_t>(1) << n;
  double below = 0.0, above = 0.0;
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (static_cast<std::size_t>(1) << i)) w += abs_ranks[i];
    if (w <= w_plus) below += 1.0;
    if (w >= w_plus) above += 1.0;
  }
  const double total = static_cast<double>(patterns);
  switch (alt) {
    case Alternative::Less:
      return below / total;
    case Alternative::Greater:
      return above / total;
    case Alternative::TwoSided:
      return std::min(1.0, 2.0 * std::min(below, above) / total);
  }
  throw std::logic_error("wilcoxon_exact_p: bad alternative");
}

double wilcoxon_normal_p(double w_plus, std::size_t n,
                         double tie_correction_sum, Alternative alt) {
  const double dn = static_cast<double>(n);
  const double mu = dn * (dn + 1.0) / 4.0;
  double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 -
               tie_correction_sum / 48.0;
  if (var <= 0.0) return 1.0;
  const double sd = std::sqrt(var);
  const double p_greater = 1.0 - normal_cdf((w_plus - mu - 0.5) / sd);
  const double p_less = normal_cdf((w_plus - mu + 0.5) / sd);
  switch (alt) {
    case Alternative::Less:
      return p_less;
    case Alternative::Greater:
      return p_greater;
    case Alternative::TwoSided:
      return std::min(1.0, 2.0 * std::min(p_less, p_greater));
  }
  throw std::logic_error("wilcoxon_normal_p: bad alternative");
}

}  // namespace detail

namespace {

// Rank-sum of the first sample within the pooled ranking, plus tie info.
struct PooledRanks {
  double rank_sum_a = 0.0;
  double tie_correction = 0.0;
  bool has_ties = false;
};

PooledRanks pooled_rank_sum(std::span<const double> a,
                            std::span<const double> b) {
  std::vector<double> pooled;
  pooled.reserve(a.size() + b.size());
  pooled.insert(pooled.end(), a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  PooledRanks r;
  std::vector<double> ranks = detail::midranks(pooled, &r.tie_correction);
  r.has_ties = r.tie_correction > 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r.rank_sum_a += ranks[i];
  return r;
}

}  // namespace

double roc_auc(std::span<const double> scores_pos,
               std::span<const double> scores_neg) {
  if (scores_pos.empty() || scores_neg.empty())
    throw std::invalid_argument("roc_auc: empty score list");
  const PooledRanks r = pooled_rank_sum(scores_pos, scores_neg);
  const double n1 = static_cast<double>(scores_pos.size());
  const double n2 = static_cast<double>(scores_neg.size());
  const double u = r.rank_sum_a - n1 * (n1 + 1.0) / 2.0;
  return u / (n1 * n2);
}

TestReport mann_whitney_u(std::span<const double> a, std::span<const double> b,
                          Alternative alternative) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("mann_whitney_u: empty sample");
  const PooledRanks r = pooled_rank_sum(a, b);
  const double n1 = static_cast<double>(a.size());
  const double u = r.rank_sum_a - n1 * (n1 + 1.0) / 2.0;

  TestReport rep;
  rep.statistic = u;
  rep.method = TestMethod::MannWhitneyU;
  rep.alternative = alternative;
  rep.n1 = a.size();
  rep.n2 = b.size();
  rep.exact =
      !r.has_ties && a.size() + b.size() <= kMannWhitneyExactMax;
  rep.p_value = rep.exact
                    ? detail::mw_exact_p(u, a.size(), b.size(), alternative)
                    : detail::mw_normal_p(u, a.size(), b.size(),
                                          r.tie_correction, alternative);
  return rep;
}

TestReport wilcoxon_signed_rank(std::span<const double> x,
                                std::span<const double> y,
                                Alternative alternative) {
  if (x.size() != y.size())
    throw std::invalid_argument("wilcoxon_signed_rank: unequal lengths");
  if (x.size() < 2)
    throw std::invalid_argument("wilcoxon_signed_rank: need at least 2 pairs");

  std::vector<double> abs_diff;
  std::vector<int> sign;
  abs_diff.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d == 0.0) continue;  // zero differences dropped before ranking
    abs_diff.push_back(std::fabs(d));
    sign.push_back(d > 0.0 ? 1 : -1);
  }
  if (abs_diff.size() < 2)
    throw std::invalid_argument(
        "wilcoxon_signed_rank: fewer than 2 non-zero differences; "
        "test undefined");

  double tie_correction = 0.0;
  std::vector<double> ranks = detail::midranks(abs_diff, &tie_correction);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (sign[i] > 0) w_plus += ranks[i];

  TestReport rep;
  rep.statistic = w_plus;
  rep.method = TestMethod::WilcoxonSignedRank;
  rep.alternative = alternative;
  rep.n1 = abs_diff.size();
  rep.n2 = abs_diff.size();
  rep.exact = abs_diff.size() <= kWilcoxonExactMax;
  rep.p_value =
      rep.exact ? detail::wilcoxon_exact_p(w_plus, ranks, alternative)
                : detail::wilcoxon_normal_p(w_plus, abs_diff.size(),
                                            tie_correction, alternative);
  return rep;
}

}  // namespace puoc
