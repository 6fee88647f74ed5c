// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/policy.hpp"

namespace engage {

std::string_view to_string(ActionSet s) {
  return s == ActionSet::All ? "all" : "encourage-reward";
}

std::optional<ActionSet> parse_action_set(std::string_view text) {
  if (text == "all") return ActionSet::All;
  if (text == "encourage-reward") return ActionSet::EncourageRewardOnly;
  return std::nullopt;
}

std::string describe(const ClusterAssignment& assignment) {
  if (const auto* id = std::get_if<std::string>(&assignment)) return *id;
  const auto& ids = std::get<ActionClusterIds>(assignment);
  std::string out;
  for (RobotAction a : kAllActions) {
    if (!out.empty()) out += ",";
    out += std::string(to_string(a)) + "=" + ids[index_of(a)];
  }
  return out;
}

RobotAction greedy_action(EngagementState state, const TransitionModel& estimated,
                          ActionSet action_set) {
  static constexpr std::array<RobotAction, 3> kPreference{
      RobotAction::Reward, RobotAction::Encourage, RobotAction::Clarify};
  RobotAction best = RobotAction::Reward;
  double best_p = -1.0;
  for (RobotAction a : kPreference) {
    if (action_set == ActionSet::EncourageRewardOnly && a == RobotAction::Clarify) continue;
    const double p = estimated.p_engaged(state, a);
    if (p > best_p) {
      best_p = p;
      best = a;
    }
  }
  return best;
}

RobotAction random_action(Rng& rng) {
  return rng.uniform() < 0.5 ? RobotAction::Encourage : RobotAction::Reward;
}

RobotAction with_clarify_noise(RobotAction base_action, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("clarify noise probability outside [0,1]");
  return rng.uniform() < p ? RobotAction::Clarify : base_action;
}

TransitionModel belief_model(const ActionClusterIds& assignment,
                             const std::array<ClusterSet, kNumActions>& clusters) {
  TransitionModel model;
  for (RobotAction a : kAllActions) {
    const ClusterSet& set = clusters[index_of(a)];
    if (!(set.level == VectorLevel::for_action(a))) {
      throw ValidationError("cluster set for " + std::string(to_string(a)) + " has level " +
                            set.level.name());
    }
    model.set(a, centroid_to_matrix(set.find(assignment[index_of(a)]).centroid));
  }
  return model;
}

TransitionModel belief_model(const std::string& participant_cluster, const ClusterSet& clusters) {
  return centroid_to_model(clusters.find(participant_cluster).centroid);
}

std::vector<ActionClusterIds> enumerate_mismatches(
    const ActionClusterIds& truth, const std::array<ClusterSet, kNumActions>& clusters) {
  for (RobotAction a : kAllActions) clusters[index_of(a)].find(truth[index_of(a)]);
  std::vector<ActionClusterIds> out;
  for (const Cluster& c : clusters[0].clusters) {
    for (const Cluster& e : clusters[1].clusters) {
      for (const Cluster& r : clusters[2].clusters) {
        ActionClusterIds candidate{c.cluster_id, e.cluster_id, r.cluster_id};
        if (candidate != truth) out.push_back(std::move(candidate));
      }
    }
  }
  return out;
}

std::vector<std::string> enumerate_mismatches(const std::string& truth, const ClusterSet& clusters) {
  clusters.find(truth);
  std::vector<std::string> out;
  for (const Cluster& c : clusters.clusters) {
    if (c.cluster_id != truth) out.push_back(c.cluster_id);
  }
  return out;
}

std::string PolicySpec::kind_name() const {
  if (std::holds_alternative<PersonalizedGreedy>(kind)) return "personalized";
  if (std::holds_alternative<Impersonal>(kind)) return "impersonal";
  return "random";
}

RobotAction PolicySpec::select(EngagementState state, double noise_p, Rng& rng) const {
  RobotAction base;
  if (const auto* g = std::get_if<PersonalizedGreedy>(&kind)) {
    base = greedy_action(state, g->belief, action_set);
  } else if (const auto* imp = std::get_if<Impersonal>(&kind)) {
    base = greedy_action(state, imp->model, action_set);
  } else {
    base = random_action(rng);
  }
  return with_clarify_noise(base, noise_p, rng);
}

PolicySpec make_personalized(std::string label, ClusterAssignment assignment,
                             TransitionModel belief) {
  PolicySpec spec;
  spec.label = std::move(label);
  spec.kind = PersonalizedGreedy{std::move(assignment), belief};
  return spec;
}

PolicySpec make_impersonal(std::string label, TransitionModel pooled) {
  PolicySpec spec;
  spec.label = std::move(label);
  spec.kind = Impersonal{pooled};
  return spec;
}

PolicySpec make_random(std::string label) {
  PolicySpec spec;
  spec.label = std::move(label);
  spec.kind = RandomChoice{};
  return spec;
}

}  // namespace engage
