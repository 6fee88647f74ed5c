// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace engage {

void CountTable::add(const Transition& t) {
  TransitionCounts& c = at(t.action, t.before);
  if (t.after == EngagementState::Engaged) {
    ++c.to_engaged;
  } else {
    ++c.to_disengaged;
  }
}

void CountTable::merge(const CountTable& other) {
  for (RobotAction a : kAllActions) {
    for (EngagementState s : kAllStates) {
      at(a, s).to_disengaged += other.at(a, s).to_disengaged;
      at(a, s).to_engaged += other.at(a, s).to_engaged;
    }
  }
}

std::uint64_t CountTable::total() const {
  std::uint64_t n = 0;
  for (const auto& per_action : counts_) {
    for (const auto& c : per_action) n += c.total();
  }
  return n;
}

bool Estimate::is_unobserved(RobotAction a, EngagementState from) const {
  return std::find(unobserved_rows.begin(), unobserved_rows.end(), RowKey{a, from}) !=
         unobserved_rows.end();
}

CountTable count_transitions(std::span<const Transition> transitions) {
  CountTable table;
  for (const Transition& t : transitions) table.add(t);
  return table;
}

Estimate estimate_model(const CountTable& table, double pseudocount) {
  if (!(pseudocount >= 0.0) || !std::isfinite(pseudocount)) {
    throw ValidationError("pseudocount must be a finite non-negative number");
  }
  Estimate est;
  for (RobotAction a : kAllActions) {
    std::array<ActionMatrix::Row, kNumStates> rows{};
    for (EngagementState s : kAllStates) {
      const TransitionCounts& c = table.at(a, s);
      const double denom = static_cast<double>(c.total()) + 2.0 * pseudocount;
      if (denom == 0.0) {
        rows[index_of(s)] = {0.5, 0.5};
        est.unobserved_rows.push_back({a, s});
        continue;
      }
      rows[index_of(s)] = {(static_cast<double>(c.to_disengaged) + pseudocount) / denom,
                           (static_cast<double>(c.to_engaged) + pseudocount) / denom};
    }
    est.model.set(a, ActionMatrix::from_rows(rows[0], rows[1]));
  }
  return est;
}

Estimate pool_and_estimate(std::span<const SessionTrace> traces, double pseudocount) {
  CountTable pooled;
  for (const SessionTrace& trace : traces) {
    const auto transitions = trace_to_transitions(trace);
    pooled.merge(count_transitions(transitions));
  }
  return estimate_model(pooled, pseudocount);
}

std::vector<ParticipantEstimate> estimate_participants(std::span<const SessionTrace> traces,
                                                       double pseudocount) {
  std::map<std::string, CountTable> by_participant;
  for (const SessionTrace& trace : traces) {
    const auto transitions = trace_to_transitions(trace);
    by_participant[trace.participant_id].merge(count_transitions(transitions));
  }
  std::vector<ParticipantEstimate> out;
  out.reserve(by_participant.size());
  for (const auto& [id, table] : by_participant) {
    out.push_back({id, estimate_model(table, pseudocount)});
  }
  return out;
}

TransitionModel average_models(std::span<const TransitionModel> models) {
  if (models.empty()) throw ValidationError("cannot average an empty set of models");
  TransitionModel out;
  const double n = static_cast<double>(models.size());
  for (RobotAction a : kAllActions) {
    std::array<double, kNumStates> p_engaged{};
    for (const TransitionModel& m : models) {
      for (EngagementState s : kAllStates) p_engaged[index_of(s)] += m.p_engaged(s, a);
    }
    out.set(a, ActionMatrix::from_engaged_probs(p_engaged[0] / n, p_engaged[1] / n));
  }
  return out;
}

}  // namespace engage
