// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "engage/types.hpp"

namespace engage {

struct TransitionCounts {
  std::uint64_t to_disengaged = 0;
  std::uint64_t to_engaged = 0;

  std::uint64_t total() const { return to_disengaged + to_engaged; }
  friend bool operator==(const TransitionCounts&, const TransitionCounts&) = default;
};

/// Sufficient statistics for maximum-likelihood estimation, keyed by
/// (action, state before the action).
class CountTable {
 public:
  TransitionCounts& at(RobotAction a, EngagementState before) {
    return counts_[index_of(a)][index_of(before)];
  }
  const TransitionCounts& at(RobotAction a, EngagementState before) const {
    return counts_[index_of(a)][index_of(before)];
  }

  void add(const Transition& t);
  void merge(const CountTable& other);
  std::uint64_t total() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::array<std::array<TransitionCounts, kNumStates>, kNumActions> counts_{};
};

struct RowKey {
  RobotAction action = RobotAction::Clarify;
  EngagementState from = EngagementState::Disengaged;

  friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

/// A fitted model plus the rows that had no observations (filled uniform).
struct Estimate {
  TransitionModel model;
  std::vector<RowKey> unobserved_rows;

  bool is_unobserved(RobotAction a, EngagementState from) const;
};

struct ParticipantEstimate {
  std::string participant_id;
  Estimate estimate;
};

CountTable count_transitions(std::span<const Transition> transitions);

/// P(s'|s,a) = (n(s,a,s') + c) / (n(s,a) + 2c). Rows with no data and c = 0
/// become [0.5, 0.5] and are listed in unobserved_rows.
Estimate estimate_model(const CountTable& table, double pseudocount = 0.0);

/// One model over the concatenation of every trace (the impersonal model).
Estimate pool_and_estimate(std::span<const SessionTrace> traces, double pseudocount = 0.0);

/// One model per participant, pooling that participant's sessions. Sorted by id.
std::vector<ParticipantEstimate> estimate_participants(std::span<const SessionTrace> traces,
                                                       double pseudocount = 0.0);

/// Element-wise mean of several models. Equals the pooled estimate when every
/// model was fit on the same number of observations per row.
TransitionModel average_models(std::span<const TransitionModel> models);

}  // namespace engage
