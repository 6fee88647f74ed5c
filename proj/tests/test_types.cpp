// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "engage/types.hpp"
#include "support.hpp"

using namespace engage;
using enum EngagementState;
using enum RobotAction;

TEST_CASE("canonical encodings") {
  CHECK(index_of(Disengaged) == 0);
  CHECK(index_of(Engaged) == 1);
  CHECK(index_of(Clarify) == 0);
  CHECK(index_of(Encourage) == 1);
  CHECK(index_of(Reward) == 2);
  for (RobotAction a : kAllActions) CHECK(parse_action(to_string(a)) == a);
  for (EngagementState s : kAllStates) CHECK(parse_state(to_string(s)) == s);
  CHECK_FALSE(parse_action("start").has_value());
  CHECK_FALSE(parse_state("e").has_value());
}

TEST_CASE("ActionMatrix rejects non-stochastic rows") {
  CHECK_THROWS_AS(ActionMatrix::from_rows({0.5, 0.4}, {0.5, 0.5}), ValidationError);
  CHECK_THROWS_AS(ActionMatrix::from_rows({1.2, -0.2}, {0.5, 0.5}), ValidationError);
  CHECK_NOTHROW(ActionMatrix::from_rows({0.3, 0.7 + 5e-10}, {1.0, 0.0}));
  const auto m = ActionMatrix::from_engaged_probs(0.6, 0.8);
  CHECK(m(Disengaged, Engaged) == doctest::Approx(0.6));
  CHECK(m(Engaged, Disengaged) == doctest::Approx(0.2));
}

TEST_CASE("trace_to_transitions: single turn") {
  SessionTrace t{"P1", "S1", Engaged, {{1, Encourage, Disengaged}}};
  const auto out = trace_to_transitions(t);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Transition{Engaged, Encourage, Disengaged});
}

TEST_CASE("trace_to_transitions: chaining") {
  SessionTrace t{"P1", "S1", Disengaged, {{1, Reward, Engaged}, {2, Clarify, Engaged}}};
  const std::vector<Transition> expected{{Disengaged, Reward, Engaged}, {Engaged, Clarify, Engaged}};
  CHECK(trace_to_transitions(t) == expected);
}

TEST_CASE("trace_to_transitions matches a loop oracle on random traces") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto trace = testing::random_trace(gen, 50);
    std::vector<Transition> oracle;
    for (std::size_t k = 0; k < trace.turns.size(); ++k) {
      const EngagementState before = k == 0 ? trace.initial_state : trace.turns[k - 1].observed;
      oracle.push_back({before, trace.turns[k].action, trace.turns[k].observed});
    }
    CHECK(trace_to_transitions(trace) == oracle);
  }
}

TEST_CASE("transitions reproduce the trace's state sequence") {
  std::mt19937_64 gen(12);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = std::uniform_int_distribution<int>(0, 40)(gen);
    const auto trace = testing::random_trace(gen, n);
    const auto tr = trace_to_transitions(trace);
    REQUIRE(tr.size() == static_cast<std::size_t>(n));
    std::vector<EngagementState> states{trace.initial_state};
    for (const Turn& t : trace.turns) states.push_back(t.observed);
    std::vector<EngagementState> rebuilt;
    if (!tr.empty()) rebuilt.push_back(tr.front().before);
    for (std::size_t k = 0; k < tr.size(); ++k) {
      if (k > 0) CHECK(tr[k].before == tr[k - 1].after);
      rebuilt.push_back(tr[k].after);
    }
    if (n > 0) CHECK(rebuilt == states);
  }
}

TEST_CASE("invalid traces are rejected") {
  SessionTrace gap{"P1", "S1", Engaged, {{1, Reward, Engaged}, {3, Reward, Engaged}}};
  CHECK_THROWS_AS(trace_to_transitions(gap), ValidationError);
  SessionTrace zero_based{"P1", "S1", Engaged, {{0, Reward, Engaged}}};
  CHECK_THROWS_AS(trace_to_transitions(zero_based), ValidationError);
  SessionTrace anonymous{"", "S1", Engaged, {}};
  CHECK_THROWS_AS(anonymous.validate(), ValidationError);
}
