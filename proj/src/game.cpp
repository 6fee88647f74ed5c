// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/game.hpp"

#include <cmath>
#include <memory>

namespace engage::game {

std::string_view to_string(Gesture g) { return g == Gesture::ThumbsUp ? "up" : "down"; }

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Ready:
      return "ready";
    case Phase::AwaitCorrectness:
      return "correct?";
    case Phase::AwaitHigherLower:
      return "higher?";
    case Phase::Won:
      return "won";
    case Phase::AwaitReplay:
      return "play-again?";
    case Phase::Finished:
      return "finished";
  }
  return "?";
}

GameState GameState::start(int target) {
  if (target < kLowest || target > kHighest) {
    throw ValidationError("target must lie in [1, 50], got " + std::to_string(target));
  }
  GameState s;
  s.target = target;
  return s;
}

void GameState::check_invariants() const {
  if (!(kLowest <= lo && lo <= target && target <= hi && hi <= kHighest)) {
    throw std::logic_error("game invariant violated: lo=" + std::to_string(lo) +
                           " target=" + std::to_string(target) + " hi=" + std::to_string(hi));
  }
}

GuessDecision choose_guess(const GameState& state, Rng& rng) {
  if (state.phase != Phase::Ready) {
    throw std::logic_error("choose_guess called while a question is open");
  }
  state.check_invariants();
  if (state.lo == state.hi) return {state.target, true, false};

  const bool want_below = state.up_count <= state.down_count;
  const int below_lo = state.lo;
  const int below_hi = state.target - 1;
  const int above_lo = state.target + 1;
  const int above_hi = state.hi;
  const bool below_ok = below_lo <= below_hi;
  const bool above_ok = above_lo <= above_hi;

  GuessDecision d;
  d.preferred_side_available = want_below ? below_ok : above_ok;
  const bool use_below = d.preferred_side_available ? want_below : !want_below;
  d.guess = use_below ? static_cast<int>(rng.uniform_int(below_lo, below_hi))
                      : static_cast<int>(rng.uniform_int(above_lo, above_hi));
  return d;
}

GameState submit_guess(GameState state, int guess) {
  if (state.phase != Phase::Ready) throw std::logic_error("guess submitted while a question is open");
  if (guess < state.lo || guess > state.hi) {
    throw std::logic_error("guess " + std::to_string(guess) + " outside the feasible range");
  }
  state.guess = guess;
  state.phase = Phase::AwaitCorrectness;
  ++state.turn;
  return state;
}

Gesture honest_answer(const GameState& state) {
  switch (state.phase) {
    case Phase::AwaitCorrectness:
      return state.guess == state.target ? Gesture::ThumbsUp : Gesture::ThumbsDown;
    case Phase::AwaitHigherLower:
      return state.target > state.guess ? Gesture::ThumbsUp : Gesture::ThumbsDown;
    default:
      throw std::logic_error("no question is open in phase " + std::string(to_string(state.phase)));
  }
}

GameState apply_answer(GameState state, Gesture answer) {
  if (state.phase == Phase::AwaitReplay) {
    state.replay_requested = answer == Gesture::ThumbsUp;
    state.phase = Phase::Finished;
    return state;
  }
  if (answer != honest_answer(state)) {
    throw ProtocolError("answer '" + std::string(to_string(answer)) + "' to '" +
                        std::string(to_string(state.phase)) + "' for guess " +
                        std::to_string(state.guess) + " contradicts the target");
  }
  if (state.phase == Phase::AwaitCorrectness) {
    if (answer == Gesture::ThumbsUp) {
      ++state.up_count;
      state.lo = state.hi = state.target;
      state.phase = Phase::Won;
    } else {
      ++state.down_count;
      state.phase = Phase::AwaitHigherLower;
    }
  } else {
    if (answer == Gesture::ThumbsUp) {
      state.lo = state.guess + 1;
      ++state.up_count;
    } else {
      state.hi = state.guess - 1;
      ++state.down_count;
    }
    state.phase = Phase::Ready;
  }
  state.check_invariants();
  return state;
}

GameState ask_replay(GameState state) {
  if (state.phase != Phase::Won) throw std::logic_error("replay asked before the game was won");
  state.phase = Phase::AwaitReplay;
  return state;
}

RobotAction classify_gesture(const GestureReading& reading, Gesture intended,
                             double legibility_ratio) {
  if (!(legibility_ratio > 0.0 && legibility_ratio < 1.0)) {
    throw ValidationError("legibility ratio must lie in (0, 1)");
  }
  if (!(reading.baseline_up > 0.0) || !(reading.baseline_down < 0.0)) {
    throw ValidationError("baselines must be nonzero: up > 0, down < 0");
  }
  const double baseline = intended == Gesture::ThumbsUp ? reading.baseline_up : reading.baseline_down;
  const bool sign_matches =
      intended == Gesture::ThumbsUp ? reading.thumb_angle > 0.0 : reading.thumb_angle < 0.0;
  const double magnitude = std::abs(reading.thumb_angle);
  if (!sign_matches || magnitude < legibility_ratio * std::abs(baseline)) return RobotAction::Clarify;
  if (magnitude >= std::abs(baseline)) return RobotAction::Reward;
  return RobotAction::Encourage;
}

GestureOracle honest_oracle(double up_angle, double down_angle) {
  return [up_angle, down_angle](const GesturePrompt& prompt) {
    return GestureSample{prompt.honest, prompt.honest == Gesture::ThumbsUp ? up_angle : down_angle};
  };
}

GestureOracle recorded_oracle(std::vector<double> angles) {
  auto stream = std::make_shared<std::vector<double>>(std::move(angles));
  auto next = std::make_shared<std::size_t>(0);
  return [stream, next](const GesturePrompt& prompt) {
    if (*next >= stream->size()) throw ProtocolError("gesture stream ended before the game did");
    const double angle = (*stream)[(*next)++];
    Gesture answer = prompt.honest;
    if (angle > 0.0) answer = Gesture::ThumbsUp;
    if (angle < 0.0) answer = Gesture::ThumbsDown;
    return GestureSample{answer, angle};
  };
}

namespace {

GameState ask_until_legible(GameState state, const GestureOracle& oracle, Rng& rng,
                            const PlayOptions& options, Transcript& transcript) {
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    GesturePrompt prompt{state.turn, state.phase, state.guess, Gesture::ThumbsUp, attempt};
    if (state.phase != Phase::AwaitReplay) prompt.honest = honest_answer(state);
    const GestureSample sample = oracle(prompt);
    double perceived = sample.thumb_angle;
    if (options.perception_noise_p > 0.0 && rng.bernoulli(options.perception_noise_p)) {
      perceived = 0.0;
    }
    const RobotAction feedback = classify_gesture(
        {perceived, options.baseline_up, options.baseline_down}, sample.answer,
        options.legibility_ratio);
    transcript.entries.push_back({state.turn, state.phase, state.guess, attempt, sample.answer,
                                  sample.thumb_angle, perceived, feedback});
    if (feedback != RobotAction::Clarify) return apply_answer(state, sample.answer);
  }
  throw ProtocolError("no legible gesture after " + std::to_string(options.max_attempts) +
                      " attempts");
}

}  // namespace

Transcript play_scripted(int target, const GestureOracle& oracle, std::uint64_t seed,
                         const PlayOptions& options) {
  if (options.max_attempts < 1) throw ValidationError("max_attempts must be at least 1");
  if (!(options.perception_noise_p >= 0.0 && options.perception_noise_p <= 1.0)) {
    throw ValidationError("perception noise probability outside [0,1]");
  }
  Rng rng(seed);
  GameState state = GameState::start(target);
  Transcript transcript;
  transcript.target = target;
  transcript.seed = seed;

  while (state.phase != Phase::Won) {
    if (state.turn >= kHighest) throw std::logic_error("game did not finish within 50 guesses");
    const GuessDecision decision = choose_guess(state, rng);
    if (!decision.forced && !decision.preferred_side_available) {
      transcript.preferred_side_always_available = false;
    }
    transcript.guesses.push_back(decision.guess);
    state = submit_guess(state, decision.guess);
    while (state.phase == Phase::AwaitCorrectness || state.phase == Phase::AwaitHigherLower) {
      state = ask_until_legible(state, oracle, rng, options, transcript);
    }
  }
  transcript.up_count = state.up_count;
  transcript.down_count = state.down_count;
  if (options.ask_replay) {
    state = ask_until_legible(ask_replay(state), oracle, rng, options, transcript);
    transcript.replay_requested = state.replay_requested;
  }
  return transcript;
}

}  // namespace engage::game
