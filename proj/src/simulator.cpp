// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace engage {

void SimulationConfig::validate() const {
  if (timesteps < 1) throw ValidationError("timesteps must be at least 1");
  if (runs < 1) throw ValidationError("runs must be at least 1");
  if (!(clarify_noise_p >= 0.0 && clarify_noise_p <= 1.0)) {
    throw ValidationError("clarify noise probability outside [0,1]");
  }
}

EngagementState step(const TransitionModel& user, EngagementState state, RobotAction action,
                     Rng& rng) {
  return rng.bernoulli(user.p_engaged(state, action)) ? EngagementState::Engaged
                                                      : EngagementState::Disengaged;
}

SessionResult run_session(const TransitionModel& user, const PolicySpec& policy,
                          const SimulationConfig& config, std::uint64_t run_seed) {
  config.validate();
  const double noise = policy.clarify_noise_p.value_or(config.clarify_noise_p);
  Rng rng(run_seed);
  SessionResult out;
  out.actions.reserve(static_cast<std::size_t>(config.timesteps));
  out.states.reserve(static_cast<std::size_t>(config.timesteps));
  EngagementState state = config.initial_state;
  int engaged = 0;
  for (int t = 0; t < config.timesteps; ++t) {
    const RobotAction action = policy.select(state, noise, rng);
    state = step(user, state, action, rng);
    out.actions.push_back(action);
    out.states.push_back(state);
    if (state == EngagementState::Engaged) ++engaged;
  }
  out.engaged_fraction = static_cast<double>(engaged) / static_cast<double>(config.timesteps);
  return out;
}

double SimulationReport::condition_mean(const std::string& condition) const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const TrialResult& r : results) {
    if (r.condition == condition) {
      sum += r.mean_fraction;
      ++n;
    }
  }
  if (n == 0) throw ValidationError("no results for condition " + condition);
  return sum / static_cast<double>(n);
}

SimulationReport run_trials(std::span<const Trial> trials, const SimulationConfig& config) {
  config.validate();
  if (trials.empty()) throw ValidationError("experiment has no trials");
  {
    std::map<std::pair<std::string, std::string>, int> seen;
    for (const Trial& t : trials) {
      if (++seen[{t.user_id, t.policy.label}] > 1) {
        throw ValidationError("duplicate trial for user " + t.user_id + " and policy " +
                              t.policy.label);
      }
    }
  }

  const std::size_t runs = static_cast<std::size_t>(config.runs);
  const std::size_t jobs = trials.size() * runs;
  std::vector<double> fractions(jobs, 0.0);

  auto work = [&](std::size_t job) {
    const Trial& trial = trials[job / runs];
    const std::uint64_t seed =
        derive_seed(config.master_seed, trial.user_id, trial.policy.label, job % runs);
    fractions[job] = run_session(trial.user, trial.policy, config, seed).engaged_fraction;
  };

  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  if (threads <= 1) {
    for (std::size_t job = 0; job < jobs; ++job) work(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < jobs; job = next++) work(job);
      });
    }
  }

  SimulationReport report;
  report.config = config;
  report.results.reserve(trials.size());
  for (std::size_t i = 0; i < trials.size(); ++i) {
    TrialResult r;
    r.user_id = trials[i].user_id;
    r.condition = trials[i].condition;
    r.policy = trials[i].policy;
    r.clarify_noise_p = trials[i].policy.clarify_noise_p.value_or(config.clarify_noise_p);
    r.run_fractions.assign(fractions.begin() + static_cast<std::ptrdiff_t>(i * runs),
                           fractions.begin() + static_cast<std::ptrdiff_t>((i + 1) * runs));
    r.mean_fraction = std::accumulate(r.run_fractions.begin(), r.run_fractions.end(), 0.0) /
                      static_cast<double>(runs);
    report.results.push_back(std::move(r));
  }
  return report;
}

SimulationReport run_experiment(std::span<const SimulatedUser> users,
                                std::span<const PolicySpec> conditions,
                                const SimulationConfig& config) {
  if (users.empty() || conditions.empty()) {
    throw ValidationError("experiment needs at least one user and one condition");
  }
  std::vector<Trial> trials;
  trials.reserve(users.size() * conditions.size());
  for (const SimulatedUser& u : users) {
    for (const PolicySpec& p : conditions) trials.push_back({u.id, u.model, p.label, p});
  }
  return run_trials(trials, config);
}

Comparison compare_conditions(const SimulationReport& report, const std::string& condition,
                              const std::string& baseline) {
  std::map<std::string, double> baseline_by_user;
  for (const TrialResult& r : report.results) {
    if (r.condition != baseline) continue;
    if (!baseline_by_user.emplace(r.user_id, r.mean_fraction).second) {
      throw ValidationError("user " + r.user_id + " has more than one '" + baseline + "' cell");
    }
  }
  std::vector<double> x;
  std::vector<double> y;
  for (const TrialResult& r : report.results) {
    if (r.condition != condition) continue;
    const auto it = baseline_by_user.find(r.user_id);
    if (it == baseline_by_user.end()) {
      throw ValidationError("user " + r.user_id + " has no '" + baseline + "' cell");
    }
    x.push_back(r.mean_fraction);
    y.push_back(it->second);
  }
  Comparison c;
  c.condition = condition;
  c.baseline = baseline;
  c.pairs = x.size();
  c.test = stats::paired_t_test(x, y);
  c.condition_mean = stats::mean(x);
  c.baseline_mean = stats::mean(y);
  return c;
}

}  // namespace engage
