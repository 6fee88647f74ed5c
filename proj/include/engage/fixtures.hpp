// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "engage/types.hpp"

namespace engage::fixtures {

/// Response archetypes seen when clustering per action:
///   I   - reliably engaging from either state,
///   II  - roughly a coin flip out of Disengaged,
///   III - state-preserving.
enum class ClusterType { I, II, III };

std::string_view to_string(ClusterType t);

/// Archetype matrix for an action. Only the Disengaged->Engaged entries 0.87
/// (encourage, Type I), 0.48 (reward, Type II) and 0.59 (clarify, Type II)
/// are reference values; every other entry is a fixture constant chosen to
/// satisfy the type definitions and is not measured data.
ActionMatrix archetype(RobotAction action, ClusterType type);

/// True when the matrix meets the qualitative definition of the type.
bool satisfies_type(const ActionMatrix& m, ClusterType type);

struct CohortMember {
  std::string id;
  std::array<ClusterType, kNumActions> types;  // canonical action order
  TransitionModel model;
};

/// The ten-user synthetic cohort. Per-action type counts:
/// clarify II/III = 3/7, reward I/II = 3/7, encourage I/II/III = 3/5/2.
/// P01-P03 are the worked-example user (clarify II, encourage I, reward II).
std::vector<CohortMember> synthetic_cohort();

/// Annotated sessions sampled from each member's model with uniformly random
/// robot actions: one session per member, `turns` turns, initial state
/// Engaged.
std::vector<SessionTrace> sample_traces(const std::vector<CohortMember>& cohort, int turns,
                                        std::uint64_t seed);

}  // namespace engage::fixtures
