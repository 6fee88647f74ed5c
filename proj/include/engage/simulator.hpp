// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "engage/policy.hpp"
#include "engage/rng.hpp"
#include "engage/stats.hpp"
#include "engage/types.hpp"

namespace engage {

struct SimulationConfig {
  int timesteps = 100;
  int runs = 100;
  double clarify_noise_p = 0.2;
  EngagementState initial_state = EngagementState::Engaged;
  std::uint64_t master_seed = 0;
  /// Worker threads for run_experiment; 0 = hardware concurrency, 1 = serial.
  /// Has no effect on results.
  unsigned threads = 0;

  void validate() const;
};

/// Next state drawn from the (action, state) row of the user's model.
EngagementState step(const TransitionModel& user, EngagementState state, RobotAction action,
                     Rng& rng);

struct SessionResult {
  std::vector<RobotAction> actions;
  /// Post-action states; the initial state is not included.
  std::vector<EngagementState> states;
  double engaged_fraction = 0.0;
};

SessionResult run_session(const TransitionModel& user, const PolicySpec& policy,
                          const SimulationConfig& config, std::uint64_t run_seed);

struct SimulatedUser {
  std::string id;
  TransitionModel model;
};

/// One (user, policy) cell of an experiment. `condition` groups cells for
/// comparison (e.g. every mismatched assignment shares "mismatched").
struct Trial {
  std::string user_id;
  TransitionModel user;
  std::string condition;
  PolicySpec policy;
};

struct TrialResult {
  std::string user_id;
  std::string condition;
  PolicySpec policy;
  double clarify_noise_p = 0.0;
  std::vector<double> run_fractions;
  double mean_fraction = 0.0;
};

struct Comparison {
  std::string condition;
  std::string baseline;
  std::size_t pairs = 0;
  double condition_mean = 0.0;
  double baseline_mean = 0.0;
  stats::TestResult test;
};

struct SimulationReport {
  SimulationConfig config;
  std::vector<TrialResult> results;
  std::vector<Comparison> comparisons;

  /// Mean over all cells of a condition.
  double condition_mean(const std::string& condition) const;
};

/// Runs `config.runs` sessions per trial with seeds
/// derive_seed(master_seed, user_id, policy.label, run). Results keep the
/// trial order, so output does not depend on scheduling.
SimulationReport run_trials(std::span<const Trial> trials, const SimulationConfig& config);

/// Every user against every condition; each policy's label is its condition.
SimulationReport run_experiment(std::span<const SimulatedUser> users,
                                std::span<const PolicySpec> conditions,
                                const SimulationConfig& config);

/// Paired t-test of each cell of `condition` against the same user's
/// `baseline` cell. Each user must have exactly one baseline cell.
Comparison compare_conditions(const SimulationReport& report, const std::string& condition,
                              const std::string& baseline);

}  // namespace engage
