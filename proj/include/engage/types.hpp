// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace engage {

/// Thrown when an input violates a documented precondition or schema.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical encodings are fixed project-wide: they index matrices and appear
// in every file format.
enum class EngagementState : std::uint8_t { Disengaged = 0, Engaged = 1 };
enum class RobotAction : std::uint8_t { Clarify = 0, Encourage = 1, Reward = 2 };

inline constexpr std::size_t kNumStates = 2;
inline constexpr std::size_t kNumActions = 3;

inline constexpr std::array<EngagementState, kNumStates> kAllStates{
    EngagementState::Disengaged, EngagementState::Engaged};
inline constexpr std::array<RobotAction, kNumActions> kAllActions{
    RobotAction::Clarify, RobotAction::Encourage, RobotAction::Reward};

constexpr std::size_t index_of(EngagementState s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(RobotAction a) { return static_cast<std::size_t>(a); }

/// "D" / "E".
std::string_view to_string(EngagementState s);
/// "clarify" / "encourage" / "reward".
std::string_view to_string(RobotAction a);

std::optional<EngagementState> parse_state(std::string_view token);
std::optional<RobotAction> parse_action(std::string_view token);

/// Row-sum tolerance for every stochastic matrix in the project.
inline constexpr double kRowTolerance = 1e-9;

/// One action's slice of the transition function: row = current state,
/// column = next state.
class ActionMatrix {
 public:
  using Row = std::array<double, kNumStates>;

  /// Uniform rows.
  ActionMatrix();

  /// Throws ValidationError unless both rows are probability vectors.
  static ActionMatrix from_rows(const Row& from_disengaged, const Row& from_engaged);

  /// Builds rows [1 - p, p] from the probabilities of ending Engaged.
  static ActionMatrix from_engaged_probs(double p_engaged_from_disengaged,
                                         double p_engaged_from_engaged);

  double operator()(EngagementState from, EngagementState to) const {
    return rows_[index_of(from)][index_of(to)];
  }
  const Row& row(EngagementState from) const { return rows_[index_of(from)]; }
  double p_engaged(EngagementState from) const {
    return rows_[index_of(from)][index_of(EngagementState::Engaged)];
  }

  friend bool operator==(const ActionMatrix&, const ActionMatrix&) = default;

 private:
  std::array<Row, kNumStates> rows_;
};

/// Throws ValidationError if the row has an entry outside [0,1] or does not
/// sum to one within kRowTolerance.
void validate_probability_row(const ActionMatrix::Row& row);

/// T(s, a): one ActionMatrix per robot action.
class TransitionModel {
 public:
  TransitionModel() = default;
  explicit TransitionModel(const std::array<ActionMatrix, kNumActions>& matrices)
      : matrices_(matrices) {}

  const ActionMatrix& operator[](RobotAction a) const { return matrices_[index_of(a)]; }
  void set(RobotAction a, const ActionMatrix& m) { matrices_[index_of(a)] = m; }

  double p_engaged(EngagementState from, RobotAction a) const {
    return matrices_[index_of(a)].p_engaged(from);
  }

  friend bool operator==(const TransitionModel&, const TransitionModel&) = default;

 private:
  std::array<ActionMatrix, kNumActions> matrices_{};
};

struct Turn {
  int index = 0;
  RobotAction action = RobotAction::Clarify;
  EngagementState observed = EngagementState::Disengaged;

  friend bool operator==(const Turn&, const Turn&) = default;
};

/// Annotated session. `observed` on each turn is the state after the robot's
/// action, so the state before the first action must be given explicitly.
struct SessionTrace {
  std::string participant_id;
  std::string session_id;
  EngagementState initial_state = EngagementState::Engaged;
  std::vector<Turn> turns;

  /// Non-empty participant id; turn indices 1, 2, 3, ...
  void validate() const;

  friend bool operator==(const SessionTrace&, const SessionTrace&) = default;
};

struct Transition {
  EngagementState before = EngagementState::Disengaged;
  RobotAction action = RobotAction::Clarify;
  EngagementState after = EngagementState::Disengaged;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// One transition per turn, chaining each turn's observed state into the next.
std::vector<Transition> trace_to_transitions(const SessionTrace& trace);

}  // namespace engage
