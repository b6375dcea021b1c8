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

#ifndef PUOC_STATS_HPP
#define PUOC_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace puoc {

enum class TestMethod { MannWhitneyU, WilcoxonSignedRank };

/// For Mann-Whitney, Less means "a tends below b" (small U of a).
/// For Wilcoxon, Greater means "x - y tends positive" (large W+).
enum class Alternative { TwoSided, Less, Greater };

struct TestReport {
  double statistic = 0.0;
  double p_value = 1.0;
  TestMethod method = TestMethod::MannWhitneyU;
  Alternative alternative = Alternative::TwoSided;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  bool exact = false;  // true when the p-value came from enumeration
};

/// Exact enumeration limits. Mann-Whitney enumerates when the pooled size is
/// at most kMannWhitneyExactMax and there are no ties; Wilcoxon enumerates
/// sign patterns when the non-zero pair count is at most kWilcoxonExactMax.
inline constexpr std::size_t kMannWhitneyExactMax = 16;
inline constexpr std::size_t kWilcoxonExactMax = 12;

/// P(score_pos > score_neg) + 0.5 * P(tie), via midranks.
double roc_auc(std::span<const double> scores_pos,
               std::span<const double> scores_neg);

TestReport mann_whitney_u(std::span<const double> a, std::span<const double> b,
                          Alternative alternative = Alternative::TwoSided);

/// Paired test on x - y. Zero differences are dropped before ranking; fewer
/// than two non-zero differences leaves the test undefined and throws.
TestReport wilcoxon_signed_rank(std::span<const double> x,
                                std::span<const double> y,
                                Alternative alternative = Alternative::TwoSided);

namespace detail {

/// Midranks of the values (average rank across each tie group, 1-based).
/// Also accumulates sum of (t^3 - t) over tie groups for variance correction.
std::vector<double> midranks(std::span<const double> values,
                             double* tie_correction_sum);

/// Normal CDF.
double normal_cdf(double z);

/// Mann-Whitney p-value by exact tie-free enumeration (count-based DP over
/// the null distribution of U). u must be integral.
double mw_exact_p(double u, std::size_t n1, std::size_t n2, Alternative alt);

/// Mann-Whitney p-value by normal approximation with tie correction and
/// continuity correction.
double mw_normal_p(double u, std::size_t n1, std::size_t n2,
                   double tie_correction_sum, Alternative alt);

/// Wilcoxon p-value by enumeration of all 2^n sign patterns over the given
/// absolute-value midranks.
double wilcoxon_exact_p(double w_plus, std::span<const double> abs_ranks,
                        Alternative alt);

/// Wilcoxon p-value by normal approximation.
double wilcoxon_normal_p(double w_plus, std::size_t n,
                         double tie_correction_sum, Alternative alt);

}  // namespace detail

}  // namespace puoc

#endif  // PUOC_STATS_HPP
