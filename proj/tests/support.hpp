// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

// Random generators shared by the test suites.

#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "engage/types.hpp"

namespace engage::testing {

inline ActionMatrix random_matrix(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return ActionMatrix::from_engaged_probs(u(gen), u(gen));
}

inline TransitionModel random_model(std::mt19937_64& gen) {
  TransitionModel m;
  for (RobotAction a : kAllActions) m.set(a, random_matrix(gen));
  return m;
}

inline EngagementState random_state(std::mt19937_64& gen) {
  return std::bernoulli_distribution(0.5)(gen) ? EngagementState::Engaged
                                               : EngagementState::Disengaged;
}

inline RobotAction random_action(std::mt19937_64& gen) {
  return kAllActions[std::uniform_int_distribution<std::size_t>(0, 2)(gen)];
}

inline SessionTrace random_trace(std::mt19937_64& gen, int turns, std::string pid = "P1",
                                 std::string sid = "S1") {
  SessionTrace t{std::move(pid), std::move(sid), random_state(gen), {}};
  for (int k = 1; k <= turns; ++k) t.turns.push_back({k, random_action(gen), random_state(gen)});
  return t;
}

inline std::vector<Transition> random_transitions(std::mt19937_64& gen, std::size_t n) {
  std::vector<Transition> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({random_state(gen), random_action(gen), random_state(gen)});
  }
  return out;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("engage-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace engage::testing
