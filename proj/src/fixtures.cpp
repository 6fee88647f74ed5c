// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/fixtures.hpp"

#include <cstdio>

#include "engage/rng.hpp"

namespace engage::fixtures {

std::string_view to_string(ClusterType t) {
  switch (t) {
    case ClusterType::I:
      return "I";
    case ClusterType::II:
      return "II";
    case ClusterType::III:
      return "III";
  }
  return "?";
}

ActionMatrix archetype(RobotAction action, ClusterType type) {
  switch (type) {
    case ClusterType::I:
      return ActionMatrix::from_engaged_probs(0.87, 0.90);
    case ClusterType::III:
      return ActionMatrix::from_engaged_probs(0.15, 0.85);
    case ClusterType::II:
      switch (action) {
        case RobotAction::Clarify:
          return ActionMatrix::from_engaged_probs(0.59, 0.75);
        case RobotAction::Encourage:
          return ActionMatrix::from_engaged_probs(0.50, 0.80);
        case RobotAction::Reward:
          return ActionMatrix::from_engaged_probs(0.48, 0.80);
      }
  }
  throw ValidationError("unknown archetype");
}

bool satisfies_type(const ActionMatrix& m, ClusterType type) {
  using enum EngagementState;
  switch (type) {
    case ClusterType::I:
      return m.p_engaged(Disengaged) >= 0.75 && m.p_engaged(Engaged) >= 0.75;
    case ClusterType::II:
      return m.p_engaged(Disengaged) >= 0.4 && m.p_engaged(Disengaged) <= 0.6;
    case ClusterType::III:
      return m(Disengaged, Disengaged) >= 0.6 && m(Engaged, Engaged) >= 0.6;
  }
  return false;
}

std::vector<CohortMember> synthetic_cohort() {
  using enum ClusterType;
  // clarify, encourage, reward
  static constexpr std::array<std::array<ClusterType, kNumActions>, 10> kTypes{{
      {II, I, II},
      {II, I, II},
      {II, I, II},
      {III, II, II},
      {III, II, II},
      {III, II, II},
      {III, II, II},
      {III, II, I},
      {III, III, I},
      {III, III, I},
  }};
  std::vector<CohortMember> out;
  for (std::size_t u = 0; u < kTypes.size(); ++u) {
    char id[8];
    std::snprintf(id, sizeof id, "P%02zu", u + 1);
    CohortMember m{id, kTypes[u], {}};
    for (RobotAction a : kAllActions) m.model.set(a, archetype(a, kTypes[u][index_of(a)]));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SessionTrace> sample_traces(const std::vector<CohortMember>& cohort, int turns,
                                        std::uint64_t seed) {
  if (turns < 1) throw ValidationError("turns must be at least 1");
  std::vector<SessionTrace> out;
  for (const CohortMember& m : cohort) {
    Rng rng(derive_seed(seed, m.id, "fixture-trace", 0));
    SessionTrace trace{m.id, "S1", EngagementState::Engaged, {}};
    EngagementState state = trace.initial_state;
    for (int k = 1; k <= turns; ++k) {
      const auto action = kAllActions[static_cast<std::size_t>(rng.uniform_int(0, 2))];
      state = rng.bernoulli(m.model.p_engaged(state, action)) ? EngagementState::Engaged
                                                              : EngagementState::Disengaged;
      trace.turns.push_back({k, action, state});
    }
    out.push_back(std::move(trace));
  }
  return out;
}

}  // namespace engage::fixtures
