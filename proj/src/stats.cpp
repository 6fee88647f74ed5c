// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "engage/types.hpp"

namespace engage::stats {

double mean(std::span<const double> v) {
  if (v.empty()) throw ValidationError("mean of an empty sample");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
  if (v.size() < 2) throw ValidationError("sample variance needs at least two values");
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

double students_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw ValidationError("students_t_cdf: df must be positive");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::students_t_distribution<double>(df), t);
}

TestResult paired_t_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("paired t-test: samples differ in length");
  if (x.size() < 2) throw ValidationError("paired t-test: need at least two pairs");
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  const double n = static_cast<double>(d.size());
  const double md = mean(d);
  const double var = sample_variance(d);
  TestResult r;
  r.df = n - 1.0;
  r.method = "paired t-test (two-tailed)";
  if (var == 0.0) {
    if (md != 0.0) {
      throw UndefinedStatistic("paired t-test: differences are constant and nonzero");
    }
    r.statistic = 0.0;
    r.p_value = 1.0;
    return r;
  }
  r.statistic = md / std::sqrt(var / n);
  const boost::math::students_t_distribution<double> dist(*r.df);
  r.p_value = std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.statistic))),
                         0.0, 1.0);
  return r;
}

double kappa_from_agreement(double observed, double chance) {
  if (!(observed >= 0.0 && observed <= 1.0 && chance >= 0.0 && chance <= 1.0)) {
    throw ValidationError("agreement proportions must lie in [0,1]");
  }
  if (chance >= 1.0) throw UndefinedStatistic("cohens_kappa: chance agreement is 1");
  return (observed - chance) / (1.0 - chance);
}

double cohens_kappa(const ConfusionTable& table) {
  double total = 0.0;
  for (const auto& row : table) {
    for (std::uint64_t c : row) total += static_cast<double>(c);
  }
  if (total <= 0.0) throw ValidationError("cohens_kappa: empty table");
  const double observed = static_cast<double>(table[0][0] + table[1][1]) / total;
  double expected = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double row = static_cast<double>(table[k][0] + table[k][1]);
    const double col = static_cast<double>(table[0][k] + table[1][k]);
    expected += row * col;
  }
  expected /= total * total;
  return kappa_from_agreement(observed, expected);
}

namespace {

double normal_two_tailed(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

}  // namespace

double wilcoxon_exact_p(std::span<const double> ranks, double w_plus) {
  // Ranks are multiples of 1/2, so work with doubled integer ranks and count
  // sign patterns by subset-sum.
  std::vector<long> doubled;
  doubled.reserve(ranks.size());
  long total = 0;
  for (double r : ranks) {
    const long d = std::lround(2.0 * r);
    doubled.push_back(d);
    total += d;
  }
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  long reach = 0;
  for (long d : doubled) {
    for (long s = reach; s >= 0; --s) ways[static_cast<std::size_t>(s + d)] += ways[static_cast<std::size_t>(s)];
    reach += d;
  }
  const long observed = std::lround(2.0 * w_plus);
  // Everything is doubled, so the centre is total / 2 and distances are compared
  // in doubled units as well.
  const long obs_dev = std::abs(2 * observed - total);
  double hits = 0.0;
  for (long s = 0; s <= total; ++s) {
    if (std::abs(2 * s - total) >= obs_dev) hits += ways[static_cast<std::size_t>(s)];
  }
  return std::min(1.0, hits / std::ldexp(1.0, static_cast<int>(ranks.size())));
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    WilcoxonPMode mode) {
  if (x.size() != y.size()) throw ValidationError("wilcoxon: samples differ in length");
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] - y[i] != 0.0) d.push_back(x[i] - y[i]);
  }
  if (d.empty()) throw UndefinedStatistic("wilcoxon: every difference is zero");

  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });
  std::vector<double> ranks(n);
  double tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }

  WilcoxonResult r;
  r.n_used = n;
  r.ranks = ranks;
  for (std::size_t i = 0; i < n; ++i) (d[i] > 0 ? r.w_plus : r.w_minus) += ranks[i];

  const double nn = static_cast<double>(n);
  const double mu = nn * (nn + 1.0) / 4.0;
  const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
  const double dev = std::max(0.0, std::abs(r.w_plus - mu) - 0.5);
  r.z = var > 0.0 ? std::copysign(dev / std::sqrt(var), r.w_plus - mu) : 0.0;
  r.p_normal = var > 0.0 ? std::min(1.0, normal_two_tailed(r.z)) : 1.0;

  const bool want_exact = mode == WilcoxonPMode::Exact ||
                          (mode == WilcoxonPMode::Auto && n <= kWilcoxonExactMax);
  if (want_exact) r.p_exact = wilcoxon_exact_p(ranks, r.w_plus);

  r.test.statistic = r.w_plus;
  r.test.df = std::nullopt;
  if (mode != WilcoxonPMode::Normal && r.p_exact) {
    r.test.p_value = *r.p_exact;
    r.test.method = "Wilcoxon signed-rank (exact)";
  } else {
    r.test.p_value = r.p_normal;
    r.test.method = "Wilcoxon signed-rank (normal approximation)";
  }
  return r;
}

double cronbachs_alpha(const std::vector<std::vector<double>>& scores) {
  if (scores.size() < 2) throw ValidationError("cronbachs_alpha: need at least two respondents");
  const std::size_t k = scores.front().size();
  if (k < 2) throw ValidationError("cronbachs_alpha: need at least two items");
  for (const auto& row : scores) {
    if (row.size() != k) throw ValidationError("cronbachs_alpha: ragged score matrix");
  }
  double item_var_sum = 0.0;
  std::vector<double> column(scores.size());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < scores.size(); ++r) column[r] = scores[r][i];
    item_var_sum += sample_variance(column);
  }
  std::vector<double> totals(scores.size());
  for (std::size_t r = 0; r < scores.size(); ++r) {
    totals[r] = std::accumulate(scores[r].begin(), scores[r].end(), 0.0);
  }
  const double total_var = sample_variance(totals);
  if (total_var == 0.0) throw UndefinedStatistic("cronbachs_alpha: total score has zero variance");
  const double kk = static_cast<double>(k);
  return kk / (kk - 1.0) * (1.0 - item_var_sum / total_var);
}

}  // namespace engage::stats
