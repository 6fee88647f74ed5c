// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "engage/clustering.hpp"
#include "engage/rng.hpp"
#include "engage/types.hpp"

namespace engage {

enum class ActionSet { All, EncourageRewardOnly };

std::string_view to_string(ActionSet s);
std::optional<ActionSet> parse_action_set(std::string_view text);

/// Per-action cluster ids, indexed by canonical action order.
using ActionClusterIds = std::array<std::string, kNumActions>;

/// Either one participant-level cluster id or one id per action.
using ClusterAssignment = std::variant<std::string, ActionClusterIds>;

std::string describe(const ClusterAssignment& assignment);

/// The action in `action_set` most likely to leave the user Engaged from
/// `state`. Ties prefer Reward, then Encourage, then Clarify.
RobotAction greedy_action(EngagementState state, const TransitionModel& estimated,
                          ActionSet action_set = ActionSet::All);

/// Encourage or Reward with equal probability. Consumes one draw.
RobotAction random_action(Rng& rng);

/// Clarify with probability p, else base_action. Consumes one draw.
RobotAction with_clarify_noise(RobotAction base_action, double p, Rng& rng);

/// Model the robot believes the user follows, assembled from cluster centroids.
TransitionModel belief_model(const ActionClusterIds& assignment,
                             const std::array<ClusterSet, kNumActions>& clusters);
TransitionModel belief_model(const std::string& participant_cluster, const ClusterSet& clusters);

/// Every per-action combination of cluster ids other than `truth`, in
/// lexicographic order of (clarify, encourage, reward) cluster positions.
std::vector<ActionClusterIds> enumerate_mismatches(
    const ActionClusterIds& truth, const std::array<ClusterSet, kNumActions>& clusters);

/// Every participant-level cluster id other than `truth`.
std::vector<std::string> enumerate_mismatches(const std::string& truth, const ClusterSet& clusters);

struct PersonalizedGreedy {
  ClusterAssignment assignment;
  TransitionModel belief;
};

struct Impersonal {
  TransitionModel model;
};

struct RandomChoice {};

struct PolicySpec {
  /// Unique within an experiment; also feeds per-run seed derivation.
  std::string label;
  std::variant<PersonalizedGreedy, Impersonal, RandomChoice> kind = RandomChoice{};
  /// Unset means "use the simulation config's value".
  std::optional<double> clarify_noise_p;
  ActionSet action_set = ActionSet::All;

  std::string kind_name() const;

  /// Base action from the strategy, then clarify noise with probability
  /// `noise_p`. Random policies consume two draws, greedy ones one.
  RobotAction select(EngagementState state, double noise_p, Rng& rng) const;
};

PolicySpec make_personalized(std::string label, ClusterAssignment assignment,
                             TransitionModel belief);
PolicySpec make_impersonal(std::string label, TransitionModel pooled);
PolicySpec make_random(std::string label);

}  // namespace engage
