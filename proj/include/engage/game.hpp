// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "engage/rng.hpp"
#include "engage/types.hpp"

namespace engage::game {

inline constexpr int kLowest = 1;
inline constexpr int kHighest = 50;

/// The participant's answer contradicts the secret number.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Gesture : std::uint8_t { ThumbsDown = 0, ThumbsUp = 1 };

enum class Phase {
  Ready,             // robot may guess
  AwaitCorrectness,  // "is it <guess>?"  up = yes, down = no
  AwaitHigherLower,  // "is it higher?"   up = higher, down = lower
  Won,
  AwaitReplay,       // "play again?"
  Finished,
};

std::string_view to_string(Gesture g);
std::string_view to_string(Phase p);

struct GameState {
  int target = kLowest;
  int lo = kLowest;
  int hi = kHighest;
  int up_count = 0;
  int down_count = 0;
  Phase phase = Phase::Ready;
  int guess = 0;  // meaningful while a question about it is open
  int turn = 0;   // guesses made so far
  bool replay_requested = false;

  static GameState start(int target);

  /// lo <= target <= hi inside [1, 50]; throws std::logic_error otherwise.
  void check_invariants() const;
};

struct GuessDecision {
  int guess = 0;
  /// lo == hi == target: nothing left to choose.
  bool forced = false;
  /// The side that keeps thumbs-up/down counts balanced had candidates.
  bool preferred_side_available = false;
};

/// Guesses below the target (to draw a "higher" thumbs-up) while
/// up_count <= down_count, above it otherwise, uniformly within the feasible
/// range and never the target itself unless nothing else is left. Falls back
/// to the other side when the preferred side is empty.
GuessDecision choose_guess(const GameState& state, Rng& rng);

/// Ready -> AwaitCorrectness. The guess must lie in [lo, hi].
GameState submit_guess(GameState state, int guess);

/// What an honest participant answers to the open question.
Gesture honest_answer(const GameState& state);

/// Applies the answer to the open question. Throws ProtocolError (leaving
/// the caller's state untouched) when the answer contradicts the target.
GameState apply_answer(GameState state, Gesture answer);

/// Won -> AwaitReplay.
GameState ask_replay(GameState state);

struct GestureReading {
  double thumb_angle = 0.0;    // degrees, positive = thumbs-up direction
  double baseline_up = 60.0;   // > 0
  double baseline_down = -60.0;  // < 0
};

/// Clarify when the angle points the wrong way or is below
/// legibility_ratio * |baseline|; Reward at or beyond the baseline;
/// Encourage in between.
RobotAction classify_gesture(const GestureReading& reading, Gesture intended,
                             double legibility_ratio = 0.5);

struct GesturePrompt {
  int turn = 0;
  Phase phase = Phase::Ready;
  int guess = 0;
  Gesture honest = Gesture::ThumbsUp;
  int attempt = 1;
};

struct GestureSample {
  Gesture answer = Gesture::ThumbsUp;
  double thumb_angle = 0.0;
};

using GestureOracle = std::function<GestureSample(const GesturePrompt&)>;

/// Always answers honestly with a thumbs-up of `up_angle` or a thumbs-down
/// of `down_angle` (negative).
GestureOracle honest_oracle(double up_angle = 60.0, double down_angle = -60.0);

/// Replays recorded angles in order; the sign of each angle is the answer.
/// A zero angle is taken as the honest answer (and will be classified as
/// illegible). Throws ProtocolError when the stream runs out.
GestureOracle recorded_oracle(std::vector<double> angles);

struct PlayOptions {
  double baseline_up = 60.0;
  double baseline_down = -60.0;
  double legibility_ratio = 0.5;
  /// Probability that perception loses a gesture (read as angle 0).
  double perception_noise_p = 0.0;
  /// Gestures requested per question before giving up.
  int max_attempts = 20;
  bool ask_replay = false;
};

struct TranscriptEntry {
  int turn = 0;
  Phase question = Phase::Ready;
  int guess = 0;
  int attempt = 1;
  Gesture answer = Gesture::ThumbsUp;
  double thumb_angle = 0.0;
  double perceived_angle = 0.0;
  RobotAction feedback = RobotAction::Clarify;
};

struct Transcript {
  int target = 0;
  std::uint64_t seed = 0;
  std::vector<int> guesses;
  std::vector<TranscriptEntry> entries;
  int up_count = 0;
  int down_count = 0;
  /// False if any unforced guess had to fall back to the non-preferred side.
  bool preferred_side_always_available = true;
  bool replay_requested = false;
};

/// Plays one full game with the given gesture source. Illegible gestures get
/// a Clarify and the question is asked again. Deterministic in (target,
/// oracle, seed, options).
Transcript play_scripted(int target, const GestureOracle& oracle, std::uint64_t seed,
                         const PlayOptions& options = {});

}  // namespace engage::game
