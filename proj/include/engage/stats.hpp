// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace engage::stats {

/// The statistic is undefined for the given data (e.g. a t statistic with
/// zero spread but a nonzero mean difference).
class UndefinedStatistic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TestResult {
  double statistic = 0.0;
  std::optional<double> df;
  double p_value = 1.0;
  std::string method;
};

/// P(T <= t) for Student's t with `df` degrees of freedom.
double students_t_cdf(double t, double df);

/// Two-tailed paired t-test on d = x - y.
TestResult paired_t_test(std::span<const double> x, std::span<const double> y);

using ConfusionTable = std::array<std::array<std::uint64_t, 2>, 2>;

/// (p_o - p_e) / (1 - p_e).
double kappa_from_agreement(double observed, double chance);

/// Cohen's kappa for two annotators; rows = annotator A, columns = annotator B.
double cohens_kappa(const ConfusionTable& table);

enum class WilcoxonPMode { Auto, Normal, Exact };

struct WilcoxonResult {
  /// statistic = W (sum of positive-difference ranks); p per the chosen mode.
  TestResult test;
  double w_plus = 0.0;
  double w_minus = 0.0;
  /// Pairs left after dropping zero differences.
  std::size_t n_used = 0;
  /// Normal approximation with tie and continuity correction.
  double z = 0.0;
  double p_normal = 1.0;
  std::optional<double> p_exact;
  /// |difference| ranks after the zero drop, ties averaged, in input order.
  std::vector<double> ranks;
};

inline constexpr std::size_t kWilcoxonExactMax = 12;

/// Wilcoxon signed-rank test with the zero-drop treatment. The exact p is
/// computed for n_used <= kWilcoxonExactMax (always under Auto), or on demand
/// under Exact for any n.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    WilcoxonPMode mode = WilcoxonPMode::Auto);

/// Two-sided exact p: P(|W - n(n+1)/4| >= |w_plus - n(n+1)/4|) under random
/// signs, for the given (possibly tied) ranks.
double wilcoxon_exact_p(std::span<const double> ranks, double w_plus);

/// Cronbach's alpha; `scores[r][i]` is respondent r's score on item i.
double cronbachs_alpha(const std::vector<std::vector<double>>& scores);

/// Sample mean and sample variance (n - 1 denominator).
double mean(std::span<const double> v);
double sample_variance(std::span<const double> v);

}  // namespace engage::stats
