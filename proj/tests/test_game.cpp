// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "engage/game.hpp"

using namespace engage;
using namespace engage::game;
using enum RobotAction;

namespace {

/// Replays a transcript's guesses against the rules with its own bookkeeping.
/// Returns an empty string when every guess is consistent.
std::string check_playout(const Transcript& t) {
  int lo = kLowest, hi = kHighest, up = 0, down = 0;
  std::set<int> excluded;
  for (std::size_t k = 0; k < t.guesses.size(); ++k) {
    const int g = t.guesses[k];
    if (g < lo || g > hi) return "guess outside range at turn " + std::to_string(k + 1);
    if (excluded.count(g)) return "guess repeated an excluded number";
    const bool last = k + 1 == t.guesses.size();
    if (last != (g == t.target)) return "game did not end exactly at the target";
    if (g == t.target) {
      if (lo != hi && (lo < t.target || hi > t.target)) {
        // The target may only be guessed once nothing else is left.
        return "target guessed while other candidates remained";
      }
      ++up;
      break;
    }
    const bool want_below = up <= down;
    const bool below_ok = lo <= t.target - 1;
    const bool above_ok = t.target + 1 <= hi;
    const bool preferred_ok = want_below ? below_ok : above_ok;
    const bool went_below = g < t.target;
    if (preferred_ok && went_below != want_below) return "side rule broken";
    ++down;  // "is it g?" -> no
    if (went_below) {
      ++up;
      for (int x = lo; x <= g; ++x) excluded.insert(x);
      lo = g + 1;
    } else {
      ++down;
      for (int x = g; x <= hi; ++x) excluded.insert(x);
      hi = g - 1;
    }
  }
  if (up != t.up_count || down != t.down_count) return "counts differ";
  return {};
}

}  // namespace

TEST_CASE("choose_guess examples") {
  Rng rng(71);
  GameState s = GameState::start(25);
  s.lo = s.hi = 25;
  const auto forced = choose_guess(s, rng);
  CHECK(forced.guess == 25);
  CHECK(forced.forced);

  GameState fresh = GameState::start(40);
  for (int i = 0; i < 200; ++i) {
    const int g = choose_guess(fresh, rng).guess;
    CHECK(g >= 1);
    CHECK(g <= 39);
  }
  GameState ahead = GameState::start(40);
  ahead.up_count = 2;
  for (int i = 0; i < 200; ++i) {
    const int g = choose_guess(ahead, rng).guess;
    CHECK(g >= 41);
    CHECK(g <= 50);
  }
  GameState edge = GameState::start(1);
  const auto fallback = choose_guess(edge, rng);
  CHECK(fallback.guess > 1);
  CHECK_FALSE(fallback.preferred_side_available);
}

TEST_CASE("apply_answer range rules") {
  GameState s = submit_guess(GameState::start(40), 25);
  s = apply_answer(s, Gesture::ThumbsDown);  // not 25
  CHECK(s.phase == Phase::AwaitHigherLower);
  CHECK(s.down_count == 1);
  s = apply_answer(s, Gesture::ThumbsUp);  // higher
  CHECK(s.lo == 26);
  CHECK(s.up_count == 1);
  CHECK(s.phase == Phase::Ready);

  s = submit_guess(s, 45);
  s = apply_answer(s, Gesture::ThumbsDown);
  s = apply_answer(s, Gesture::ThumbsDown);  // lower
  CHECK(s.hi == 44);
  CHECK(s.down_count == 3);

  s = submit_guess(s, 40);
  s = apply_answer(s, Gesture::ThumbsUp);
  CHECK(s.phase == Phase::Won);
  CHECK(s.up_count == 2);
  s = apply_answer(ask_replay(s), Gesture::ThumbsUp);
  CHECK(s.phase == Phase::Finished);
  CHECK(s.replay_requested);
  // Replay answers do not move the gesture counts.
  CHECK(s.up_count == 2);
}

TEST_CASE("dishonest answers are rejected") {
  const GameState asked = submit_guess(GameState::start(40), 25);
  CHECK_THROWS_AS(apply_answer(asked, Gesture::ThumbsUp), ProtocolError);
  const GameState hl = apply_answer(asked, Gesture::ThumbsDown);
  CHECK_THROWS_AS(apply_answer(hl, Gesture::ThumbsDown), ProtocolError);
  CHECK(hl.lo == 1);
  CHECK(hl.hi == 50);
  CHECK_THROWS(submit_guess(GameState::start(40), 0));
  CHECK_THROWS_AS(GameState::start(51), ValidationError);
}

TEST_CASE("classify_gesture thresholds") {
  const GestureReading base{60, 60, -60};
  CHECK(classify_gesture(base, Gesture::ThumbsUp) == Reward);
  CHECK(classify_gesture({0, 60, -60}, Gesture::ThumbsUp) == Clarify);
  CHECK(classify_gesture({45, 60, -60}, Gesture::ThumbsUp) == Encourage);
  CHECK(classify_gesture({30, 60, -60}, Gesture::ThumbsUp) == Encourage);
  CHECK(classify_gesture({29.9, 60, -60}, Gesture::ThumbsUp) == Clarify);
  CHECK(classify_gesture({75, 60, -60}, Gesture::ThumbsUp) == Reward);
  CHECK(classify_gesture({45, 60, -60}, Gesture::ThumbsDown) == Clarify);
  CHECK(classify_gesture({-50, 60, -80}, Gesture::ThumbsDown) == Encourage);
  CHECK(classify_gesture({-80, 60, -80}, Gesture::ThumbsDown) == Reward);
  CHECK_THROWS_AS(classify_gesture({10, 0, -60}, Gesture::ThumbsUp), ValidationError);
  CHECK_THROWS_AS(classify_gesture({10, 60, -60}, Gesture::ThumbsUp, 1.0), ValidationError);
}

TEST_CASE("classify_gesture is monotone in magnitude") {
  auto rank = [](RobotAction a) { return a == Clarify ? 0 : a == Encourage ? 1 : 2; };
  for (Gesture g : {Gesture::ThumbsUp, Gesture::ThumbsDown}) {
    const double sign = g == Gesture::ThumbsUp ? 1.0 : -1.0;
    int previous = 0;
    for (int m = 0; m <= 120; ++m) {
      const int r = rank(classify_gesture({sign * m, 55, -70}, g));
      CHECK(r >= previous);
      previous = r;
    }
    CHECK(previous == 2);
  }
}

TEST_CASE("every target terminates and passes the playout checker") {
  for (int target = kLowest; target <= kHighest; ++target) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = play_scripted(target, honest_oracle(), seed);
      CHECK(t.guesses.size() <= 50);
      CHECK(t.guesses.back() == target);
      CHECK(check_playout(t) == "");
    }
  }
}

TEST_CASE("boundary targets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int target : {1, 50}) {
      const auto t = play_scripted(target, honest_oracle(), seed);
      for (const auto& e : t.entries) {
        if (target == 1 && e.question == Phase::AwaitHigherLower) CHECK(e.answer == Gesture::ThumbsDown);
        if (target == 50 && e.question == Phase::AwaitHigherLower) CHECK(e.answer == Gesture::ThumbsUp);
      }
    }
  }
}

TEST_CASE("balance holds whenever the preferred side was always available") {
  int qualifying = 0;
  for (int target = kLowest; target <= kHighest; ++target) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = play_scripted(target, honest_oracle(), seed);
      if (!t.preferred_side_always_available) continue;
      ++qualifying;
      CHECK(std::abs(t.up_count - t.down_count) <= 2);
    }
  }
  CHECK(qualifying > 0);
}

TEST_CASE("transcripts are deterministic") {
  const auto a = play_scripted(33, honest_oracle(), 5, {.perception_noise_p = 0.3});
  const auto b = play_scripted(33, honest_oracle(), 5, {.perception_noise_p = 0.3});
  CHECK(a.guesses == b.guesses);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].perceived_angle == b.entries[i].perceived_angle);
}

TEST_CASE("illegible gestures get Clarify and the question is asked again") {
  // Honest answers; the first gesture is flat, the second weak, the rest strong.
  int calls = 0;
  const GestureOracle oracle = [&calls](const GesturePrompt& p) {
    const double sign = p.honest == Gesture::ThumbsUp ? 1.0 : -1.0;
    const double magnitude = calls == 0 ? 0.0 : calls == 1 ? 40.0 : 70.0;
    ++calls;
    return GestureSample{p.honest, sign * magnitude};
  };
  const auto t = play_scripted(20, oracle, 1);
  REQUIRE(t.entries.size() >= 3);
  CHECK(t.entries[0].feedback == Clarify);
  CHECK(t.entries[0].attempt == 1);
  CHECK(t.entries[1].feedback == Encourage);
  CHECK(t.entries[1].attempt == 2);
  CHECK(t.entries[1].question == t.entries[0].question);
  CHECK(t.entries[1].guess == t.entries[0].guess);
  CHECK(t.entries[2].feedback == Reward);
  CHECK(t.entries[2].attempt == 1);
  CHECK(t.guesses.back() == 20);
  CHECK(check_playout(t) == "");
}

TEST_CASE("a recorded stream replays an honest game") {
  for (int target : {1, 26, 50}) {
    const auto honest = play_scripted(target, honest_oracle(70, -70), 9);
    std::vector<double> angles;
    for (const auto& e : honest.entries) angles.push_back(e.thumb_angle);
    const auto replayed = play_scripted(target, recorded_oracle(angles), 9);
    CHECK(replayed.guesses == honest.guesses);
    CHECK(replayed.up_count == honest.up_count);
    CHECK(replayed.down_count == honest.down_count);
  }
}

TEST_CASE("recorded streams that lie or run out are protocol errors") {
  CHECK_THROWS_AS(play_scripted(1, recorded_oracle({60}), 1), ProtocolError);
  CHECK_THROWS_AS(play_scripted(20, recorded_oracle({}), 1), ProtocolError);
}

TEST_CASE("perception noise produces clarifications") {
  PlayOptions noisy;
  noisy.perception_noise_p = 0.2;
  int clarify = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = play_scripted(17, honest_oracle(), seed, noisy);
    CHECK(check_playout(t) == "");
    for (const auto& e : t.entries) {
      ++total;
      clarify += e.feedback == Clarify ? 1 : 0;
      if (e.feedback == Clarify) CHECK(e.perceived_angle == 0.0);
    }
  }
  CHECK(static_cast<double>(clarify) / total == doctest::Approx(0.2).epsilon(0.15));
  PlayOptions always;
  always.perception_noise_p = 1.0;
  always.max_attempts = 3;
  CHECK_THROWS_AS(play_scripted(17, honest_oracle(), 1, always), ProtocolError);
}

TEST_CASE("replay question") {
  PlayOptions o;
  o.ask_replay = true;
  const auto yes = play_scripted(10, honest_oracle(), 3, o);
  CHECK(yes.replay_requested);
  CHECK(yes.entries.back().question == Phase::AwaitReplay);
  const auto base = play_scripted(10, honest_oracle(), 3);
  CHECK(yes.up_count == base.up_count);
  CHECK_FALSE(base.replay_requested);
}
