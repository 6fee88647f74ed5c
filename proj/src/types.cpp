// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/types.hpp"

#include <cmath>

namespace engage {

std::string_view to_string(EngagementState s) {
  return s == EngagementState::Engaged ? "E" : "D";
}

std::string_view to_string(RobotAction a) {
  switch (a) {
    case RobotAction::Clarify:
      return "clarify";
    case RobotAction::Encourage:
      return "encourage";
    case RobotAction::Reward:
      return "reward";
  }
  return "?";
}

std::optional<EngagementState> parse_state(std::string_view token) {
  if (token == "E") return EngagementState::Engaged;
  if (token == "D") return EngagementState::Disengaged;
  return std::nullopt;
}

std::optional<RobotAction> parse_action(std::string_view token) {
  for (RobotAction a : kAllActions) {
    if (token == to_string(a)) return a;
  }
  return std::nullopt;
}

void validate_probability_row(const ActionMatrix::Row& row) {
  double sum = 0.0;
  for (double p : row) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw ValidationError("transition probability outside [0,1]: " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowTolerance) {
    throw ValidationError("transition row does not sum to 1 (sum = " + std::to_string(sum) + ")");
  }
}

ActionMatrix::ActionMatrix() : rows_{Row{0.5, 0.5}, Row{0.5, 0.5}} {}

ActionMatrix ActionMatrix::from_rows(const Row& from_disengaged, const Row& from_engaged) {
  validate_probability_row(from_disengaged);
  validate_probability_row(from_engaged);
  ActionMatrix m;
  m.rows_ = {from_disengaged, from_engaged};
  return m;
}

ActionMatrix ActionMatrix::from_engaged_probs(double p_engaged_from_disengaged,
                                              double p_engaged_from_engaged) {
  return from_rows({1.0 - p_engaged_from_disengaged, p_engaged_from_disengaged},
                   {1.0 - p_engaged_from_engaged, p_engaged_from_engaged});
}

void SessionTrace::validate() const {
  if (participant_id.empty()) {
    throw ValidationError("session trace has an empty participant id");
  }
  for (std::size_t k = 0; k < turns.size(); ++k) {
    if (turns[k].index != static_cast<int>(k) + 1) {
      throw ValidationError("session " + participant_id + "/" + session_id + ": turn " +
                            std::to_string(turns[k].index) + " found where turn " +
                            std::to_string(k + 1) + " was expected");
    }
  }
}

std::vector<Transition> trace_to_transitions(const SessionTrace& trace) {
  trace.validate();
  std::vector<Transition> out;
  out.reserve(trace.turns.size());
  EngagementState before = trace.initial_state;
  for (const Turn& turn : trace.turns) {
    out.push_back({before, turn.action, turn.observed});
    before = turn.observed;
  }
  return out;
}

}  // namespace engage
