// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "engage/clustering.hpp"
#include "engage/estimation.hpp"
#include "engage/fixtures.hpp"
#include "engage/game.hpp"
#include "engage/io.hpp"
#include "engage/policy.hpp"
#include "engage/simulator.hpp"
#include "engage/stats.hpp"

namespace engage::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(precision) << v;
  return ss.str();
}

// ---- estimate ---------------------------------------------------------------

struct EstimateArgs {
  std::string traces;
  std::string out;
  std::string pooled_out;
  double pseudocount = 0.0;
};

void cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  const auto traces = io::load_traces(a.traces);
  std::vector<io::ModelFile> files;
  for (const auto& p : estimate_participants(traces, a.pseudocount)) {
    files.push_back({p.participant_id, p.estimate.model, p.estimate.unobserved_rows});
  }
  io::save_models(a.out, files);
  out << "estimated " << files.size() << " participant model(s) from " << traces.size()
      << " session(s)\n";
  if (!a.pooled_out.empty()) {
    const Estimate pooled = pool_and_estimate(traces, a.pseudocount);
    io::save_model(a.pooled_out, {"pooled", pooled.model, pooled.unobserved_rows});
    out << "pooled model written to " << a.pooled_out << "\n";
  }
}

// ---- cluster ----------------------------------------------------------------

struct ClusterArgs {
  std::string models;
  std::string out;
  std::string level = "action";
  std::size_t min_cluster_size = 2;
  std::string weighting = "unweighted";
};

void print_cluster_set(const ClusterSet& set, std::ostream& out) {
  out << set.level.name() << ":";
  for (const Cluster& c : set.clusters) out << " " << c.cluster_id << "=" << c.members.size();
  out << "\n";
}

void cmd_cluster(const ClusterArgs& a, std::ostream& out) {
  const auto files = io::load_models(a.models);
  AgglomerateOptions options;
  options.min_cluster_size = a.min_cluster_size;
  options.weighting = a.weighting == "member" ? CentroidWeighting::MemberWeighted
                                              : CentroidWeighting::Unweighted;
  if (a.level == "participant") {
    std::vector<ModelVector> vectors;
    for (const auto& f : files) vectors.push_back(vectorize(f.participant_id, f.model));
    const ClusterSet set = agglomerate(vectors, options);
    io::save_clusters(a.out, set);
    print_cluster_set(set, out);
    return;
  }
  std::array<ClusterSet, kNumActions> sets;
  for (RobotAction act : kAllActions) {
    std::vector<ModelVector> vectors;
    for (const auto& f : files) vectors.push_back(vectorize(f.participant_id, f.model[act], act));
    sets[index_of(act)] = agglomerate(vectors, options);
    print_cluster_set(sets[index_of(act)], out);
  }
  io::save_clusters(a.out, sets);
}

// ---- assign -----------------------------------------------------------------

ClusterAssignment assign_user(const TransitionModel& model, const std::string& id,
                              const io::ClusterFile& clusters) {
  if (const auto* set = std::get_if<ClusterSet>(&clusters)) {
    return assign_cluster(vectorize(id, model), *set);
  }
  const auto& sets = std::get<std::array<ClusterSet, kNumActions>>(clusters);
  const auto vectors = vectorize_actions(id, model);
  ActionClusterIds ids;
  for (RobotAction act : kAllActions) {
    ids[index_of(act)] = assign_cluster(vectors[index_of(act)], sets[index_of(act)]);
  }
  return ids;
}

TransitionModel belief_for(const ClusterAssignment& assignment, const io::ClusterFile& clusters) {
  if (const auto* id = std::get_if<std::string>(&assignment)) {
    return belief_model(*id, std::get<ClusterSet>(clusters));
  }
  return belief_model(std::get<ActionClusterIds>(assignment),
                      std::get<std::array<ClusterSet, kNumActions>>(clusters));
}

struct AssignArgs {
  std::string models;
  std::string clusters;
  std::string out;
};

void cmd_assign(const AssignArgs& a, std::ostream& out) {
  const auto files = io::load_models(a.models);
  const auto clusters = io::load_clusters(a.clusters);
  nlohmann::ordered_json result = nlohmann::ordered_json::array();
  for (const auto& f : files) {
    const ClusterAssignment assignment = assign_user(f.model, f.participant_id, clusters);
    nlohmann::ordered_json entry{{"participant_id", f.participant_id}};
    if (const auto* id = std::get_if<std::string>(&assignment)) {
      entry["cluster_id"] = *id;
    } else {
      nlohmann::ordered_json per_action = nlohmann::ordered_json::object();
      for (RobotAction act : kAllActions) {
        per_action[std::string(to_string(act))] =
            std::get<ActionClusterIds>(assignment)[index_of(act)];
      }
      entry["clusters"] = per_action;
    }
    result.push_back(std::move(entry));
  }
  if (a.out.empty()) {
    out << result.dump(2) << "\n";
  } else {
    io::write_json(a.out, result);
  }
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string models;
  std::string clusters;
  std::string impersonal;
  std::string out;
  std::string csv;
  std::uint64_t seed = 0;
  int timesteps = 100;
  int runs = 100;
  double clarify_prob = 0.2;
  std::string initial_state = "E";
  std::string action_set = "all";
  unsigned threads = 0;
  bool serial = false;
  std::vector<std::string> conditions{"personalized", "random", "impersonal", "mismatched"};
};

bool wants(const SimulateArgs& a, const std::string& condition) {
  return std::find(a.conditions.begin(), a.conditions.end(), condition) != a.conditions.end();
}

SimulationReport simulate(const SimulateArgs& a) {
  for (const std::string& c : a.conditions) {
    if (c != "personalized" && c != "random" && c != "impersonal" && c != "mismatched") {
      throw UsageError("unknown condition '" + c + "'");
    }
  }
  if (a.serial && a.threads > 1) throw UsageError("--serial contradicts --threads > 1");
  const auto state = parse_state(a.initial_state);
  if (!state) throw UsageError("--initial-state must be E or D");
  const auto action_set = parse_action_set(a.action_set);
  if (!action_set) throw UsageError("--action-set must be 'all' or 'encourage-reward'");

  SimulationConfig config;
  config.timesteps = a.timesteps;
  config.runs = a.runs;
  config.clarify_noise_p = a.clarify_prob;
  config.initial_state = *state;
  config.master_seed = a.seed;
  config.threads = a.serial ? 1 : a.threads;

  const auto users = io::load_models(a.models);
  const bool need_clusters = wants(a, "personalized") || wants(a, "mismatched");
  if (need_clusters && a.clusters.empty()) {
    throw UsageError("--clusters is required for personalized and mismatched conditions");
  }
  io::ClusterFile clusters = ClusterSet{};
  if (!a.clusters.empty()) clusters = io::load_clusters(a.clusters);

  TransitionModel pooled;
  if (!a.impersonal.empty()) {
    pooled = io::load_model(a.impersonal).model;
  } else {
    std::vector<TransitionModel> models;
    for (const auto& u : users) models.push_back(u.model);
    pooled = average_models(models);
  }

  std::vector<Trial> trials;
  for (const auto& u : users) {
    auto add = [&](const std::string& condition, PolicySpec policy) {
      policy.action_set = *action_set;
      trials.push_back({u.participant_id, u.model, condition, std::move(policy)});
    };
    std::optional<ClusterAssignment> truth;
    if (need_clusters) truth = assign_user(u.model, u.participant_id, clusters);
    if (wants(a, "personalized")) {
      add("personalized", make_personalized("personalized", *truth, belief_for(*truth, clusters)));
    }
    if (wants(a, "random")) add("random", make_random("random"));
    if (wants(a, "impersonal")) add("impersonal", make_impersonal("impersonal", pooled));
    if (wants(a, "mismatched")) {
      std::vector<ClusterAssignment> wrong;
      if (const auto* id = std::get_if<std::string>(&*truth)) {
        for (auto& w : enumerate_mismatches(*id, std::get<ClusterSet>(clusters))) wrong.emplace_back(w);
      } else {
        for (auto& w : enumerate_mismatches(std::get<ActionClusterIds>(*truth),
                                            std::get<std::array<ClusterSet, kNumActions>>(clusters))) {
          wrong.emplace_back(w);
        }
      }
      for (const auto& w : wrong) {
        add("mismatched",
            make_personalized("mismatched[" + describe(w) + "]", w, belief_for(w, clusters)));
      }
    }
  }

  SimulationReport report = run_trials(trials, config);
  auto maybe_compare = [&](const std::string& cond, const std::string& base) {
    if (wants(a, cond) && wants(a, base)) {
      bool any = false;
      for (const auto& r : report.results) any = any || r.condition == cond;
      if (any) report.comparisons.push_back(compare_conditions(report, cond, base));
    }
  };
  maybe_compare("personalized", "random");
  maybe_compare("mismatched", "random");
  maybe_compare("impersonal", "random");
  maybe_compare("personalized", "impersonal");
  return report;
}

void print_comparisons(const std::vector<Comparison>& comparisons, std::ostream& out) {
  out << std::left << std::setw(14) << "condition" << std::setw(12) << "baseline" << std::setw(7)
      << "pairs" << std::setw(10) << "mean" << std::setw(10) << "base" << std::setw(10) << "t"
      << std::setw(8) << "df"
      << "p\n";
  for (const Comparison& c : comparisons) {
    char p[32];
    std::snprintf(p, sizeof p, "%.3g", c.test.p_value);
    out << std::left << std::setw(14) << c.condition << std::setw(12) << c.baseline << std::setw(7)
        << c.pairs << std::setw(10) << fmt(c.condition_mean) << std::setw(10)
        << fmt(c.baseline_mean) << std::setw(10) << fmt(c.test.statistic, 3) << std::setw(8)
        << (c.test.df ? fmt(*c.test.df, 0) : "-") << p << "\n";
  }
}

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const SimulationReport report = simulate(a);
  io::save_report(a.out, report);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv, std::ios::binary);
    if (!csv) throw io::FormatError("cannot write " + a.csv);
    io::write_report_csv(csv, report);
  }
  std::vector<std::string> seen;
  for (const auto& r : report.results) {
    if (std::find(seen.begin(), seen.end(), r.condition) == seen.end()) seen.push_back(r.condition);
  }
  for (const auto& c : seen) {
    out << std::left << std::setw(14) << c << fmt(report.condition_mean(c)) << "\n";
  }
  print_comparisons(report.comparisons, out);
}

// ---- compare ----------------------------------------------------------------

struct CompareArgs {
  std::string report;
  std::string baseline = "random";
  std::string out;
};

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const SimulationReport report = io::load_report(a.report);
  std::vector<std::string> conditions;
  for (const auto& r : report.results) {
    if (r.condition != a.baseline &&
        std::find(conditions.begin(), conditions.end(), r.condition) == conditions.end()) {
      conditions.push_back(r.condition);
    }
  }
  std::vector<Comparison> comparisons;
  for (const auto& c : conditions) comparisons.push_back(compare_conditions(report, c, a.baseline));
  print_comparisons(comparisons, out);
  if (!a.out.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Comparison& c : comparisons) arr.push_back(io::to_json(c));
    io::write_json(a.out, arr);
  }
}

// ---- game -------------------------------------------------------------------

struct GameArgs {
  int target = 0;
  std::uint64_t seed = 0;
  std::string gestures;
  bool interactive = false;
  double up_angle = 60.0;
  double down_angle = -60.0;
  double baseline_up = 60.0;
  double baseline_down = -60.0;
  double legibility = 0.5;
  double perception_noise = 0.0;
  bool replay = false;
  std::string out;
};

void cmd_game(const GameArgs& a, std::istream& in, std::ostream& out) {
  if (a.interactive && !a.gestures.empty()) {
    throw UsageError("--interactive and --gestures are mutually exclusive");
  }
  game::GestureOracle oracle;
  if (!a.gestures.empty()) {
    std::ifstream f(a.gestures);
    if (!f) throw io::FormatError("cannot open " + a.gestures);
    oracle = game::recorded_oracle(io::parse_gesture_stream(f));
  } else if (a.interactive) {
    oracle = [&in, &out](const game::GesturePrompt& prompt) {
      out << "turn " << prompt.turn << " " << game::to_string(prompt.phase) << " guess "
          << prompt.guess << " > thumb angle: " << std::flush;
      double angle = 0.0;
      if (!(in >> angle)) throw game::ProtocolError("input ended before the game did");
      game::Gesture answer = prompt.honest;
      if (angle > 0) answer = game::Gesture::ThumbsUp;
      if (angle < 0) answer = game::Gesture::ThumbsDown;
      return game::GestureSample{answer, angle};
    };
  } else {
    oracle = game::honest_oracle(a.up_angle, a.down_angle);
  }
  game::PlayOptions options;
  options.baseline_up = a.baseline_up;
  options.baseline_down = a.baseline_down;
  options.legibility_ratio = a.legibility;
  options.perception_noise_p = a.perception_noise;
  options.ask_replay = a.replay;
  const game::Transcript t = game::play_scripted(a.target, oracle, a.seed, options);
  const auto j = io::to_json(t);
  if (a.out.empty()) {
    out << j.dump(2) << "\n";
  } else {
    io::write_json(a.out, j);
    out << "won after " << t.guesses.size() << " guess(es); up=" << t.up_count
        << " down=" << t.down_count << "\n";
  }
}

// ---- stats ------------------------------------------------------------------

struct StatsArgs {
  std::string x;
  std::string y;
  std::string table;
  std::string items;
  std::string mode = "auto";
};

void print_test(const stats::TestResult& r, std::ostream& out) {
  out << r.method << ": statistic=" << std::setprecision(10) << r.statistic;
  if (r.df) out << " df=" << *r.df;
  out << " p=" << r.p_value << "\n";
}

void cmd_ttest(const StatsArgs& a, std::ostream& out) {
  print_test(stats::paired_t_test(parse_list(a.x), parse_list(a.y)), out);
}

void cmd_kappa(const StatsArgs& a, std::ostream& out) {
  const auto cells = parse_list(a.table);
  if (cells.size() != 4) throw UsageError("--table needs four counts a,b,c,d (row-major)");
  stats::ConfusionTable t{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (cells[i] < 0 || cells[i] != std::floor(cells[i])) {
      throw UsageError("--table counts must be non-negative integers");
    }
    t[i / 2][i % 2] = static_cast<std::uint64_t>(cells[i]);
  }
  out << "kappa=" << std::setprecision(10) << stats::cohens_kappa(t) << "\n";
}

void cmd_wilcoxon(const StatsArgs& a, std::ostream& out) {
  stats::WilcoxonPMode mode = stats::WilcoxonPMode::Auto;
  if (a.mode == "normal") mode = stats::WilcoxonPMode::Normal;
  else if (a.mode == "exact") mode = stats::WilcoxonPMode::Exact;
  else if (a.mode != "auto") throw UsageError("--mode must be auto, normal or exact");
  const auto r = stats::wilcoxon_signed_rank(parse_list(a.x), parse_list(a.y), mode);
  out << r.test.method << ": W=" << r.w_plus << " W'=" << r.w_minus << " n=" << r.n_used
      << " z=" << std::setprecision(10) << r.z << " p_normal=" << r.p_normal;
  if (r.p_exact) out << " p_exact=" << *r.p_exact;
  out << "\n";
}

void cmd_alpha(const StatsArgs& a, std::ostream& out) {
  std::ifstream f(a.items);
  if (!f) throw io::FormatError("cannot open " + a.items);
  std::vector<std::vector<double>> scores;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    scores.push_back(parse_list(line));
  }
  out << "alpha=" << std::setprecision(10) << stats::cronbachs_alpha(scores) << "\n";
}

// ---- fixtures ---------------------------------------------------------------

struct FixtureArgs {
  std::string out;
  std::string traces_out;
  int turns = 100;
  std::uint64_t seed = 0;
};

void cmd_fixtures(const FixtureArgs& a, bool seed_given, std::ostream& out) {
  const auto cohort = fixtures::synthetic_cohort();
  std::vector<io::ModelFile> files;
  for (const auto& m : cohort) files.push_back({m.id, m.model, {}});
  io::save_models(a.out, files);
  out << "wrote " << cohort.size() << " synthetic users to " << a.out << "\n";
  if (!a.traces_out.empty()) {
    if (!seed_given) throw UsageError("--traces-out needs --seed");
    io::save_traces(a.traces_out, fixtures::sample_traces(cohort, a.turns, a.seed));
    out << "wrote sampled traces to " << a.traces_out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Engagement dynamics toolkit: estimate, cluster and simulate user models"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Fit per-participant transition models");
  estimate->add_option("--traces", est.traces, "Trace CSV")->required();
  estimate->add_option("--out", est.out, "Model collection JSON")->required();
  estimate->add_option("--pooled-out", est.pooled_out, "Also write the pooled model here");
  estimate->add_option("--pseudocount", est.pseudocount, "Additive smoothing")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  ClusterArgs clu;
  auto* cluster = app.add_subcommand("cluster", "Agglomerative clustering of models");
  cluster->add_option("--models", clu.models, "Model collection JSON")->required();
  cluster->add_option("--out", clu.out, "Cluster JSON")->required();
  cluster->add_option("--level", clu.level)
      ->capture_default_str()
      ->check(CLI::IsMember({"participant", "action"}));
  cluster->add_option("--min-cluster-size", clu.min_cluster_size)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cluster->add_option("--weighting", clu.weighting)
      ->capture_default_str()
      ->check(CLI::IsMember({"unweighted", "member"}));

  AssignArgs asg;
  auto* assign = app.add_subcommand("assign", "Assign models to existing clusters");
  assign->add_option("--models", asg.models)->required();
  assign->add_option("--clusters", asg.clusters)->required();
  assign->add_option("--out", asg.out, "Write JSON here instead of stdout");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo comparison of policies");
  simulate_cmd->add_option("--models", sim.models, "Simulated users (model collection)")->required();
  simulate_cmd->add_option("--clusters", sim.clusters, "Cluster JSON for personalization");
  simulate_cmd->add_option("--impersonal", sim.impersonal,
                           "Pooled model for the impersonal policy (default: mean of users)");
  simulate_cmd->add_option("--out", sim.out, "Report JSON")->required();
  simulate_cmd->add_option("--csv", sim.csv, "Per-run CSV");
  simulate_cmd->add_option("--seed", sim.seed, "Master seed")->required();
  simulate_cmd->add_option("--timesteps", sim.timesteps)->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--runs", sim.runs)->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--clarify-prob", sim.clarify_prob)
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--initial-state", sim.initial_state)
      ->capture_default_str()
      ->check(CLI::IsMember({"E", "D"}));
  simulate_cmd->add_option("--action-set", sim.action_set)
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "encourage-reward"}));
  simulate_cmd->add_option("--conditions", sim.conditions)->delimiter(',')->capture_default_str();
  simulate_cmd->add_option("--threads", sim.threads, "0 = hardware concurrency")->capture_default_str();
  simulate_cmd->add_flag("--serial", sim.serial, "Force single-threaded execution");

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Paired t-tests between report conditions");
  compare->add_option("--report", cmp.report)->required();
  compare->add_option("--baseline", cmp.baseline)->capture_default_str();
  compare->add_option("--out", cmp.out, "Also write the table as JSON");

  GameArgs g;
  auto* game_cmd = app.add_subcommand("game", "Play the number-guessing game");
  game_cmd->add_option("--target", g.target)->required()->check(CLI::Range(1, 50));
  game_cmd->add_option("--seed", g.seed)->required();
  game_cmd->add_option("--gestures", g.gestures, "CSV turn,thumb_angle");
  game_cmd->add_flag("--interactive", g.interactive, "Read thumb angles from stdin");
  game_cmd->add_option("--up-angle", g.up_angle)->capture_default_str();
  game_cmd->add_option("--down-angle", g.down_angle)->capture_default_str();
  game_cmd->add_option("--baseline-up", g.baseline_up)->capture_default_str();
  game_cmd->add_option("--baseline-down", g.baseline_down)->capture_default_str();
  game_cmd->add_option("--legibility", g.legibility)->capture_default_str();
  game_cmd->add_option("--perception-noise", g.perception_noise)->capture_default_str();
  game_cmd->add_flag("--replay", g.replay, "Ask to play again at the end");
  game_cmd->add_option("--out", g.out, "Transcript JSON (default: stdout)");

  StatsArgs st;
  auto* stats_cmd = app.add_subcommand("stats", "Statistical tests");
  stats_cmd->require_subcommand(1);
  auto* ttest = stats_cmd->add_subcommand("ttest", "Two-tailed paired t-test");
  ttest->add_option("--x", st.x)->required();
  ttest->add_option("--y", st.y)->required();
  auto* kappa = stats_cmd->add_subcommand("kappa", "Cohen's kappa of a 2x2 table");
  kappa->add_option("--table", st.table, "a,b,c,d row-major")->required();
  auto* wilcoxon = stats_cmd->add_subcommand("wilcoxon", "Wilcoxon signed-rank test");
  wilcoxon->add_option("--x", st.x)->required();
  wilcoxon->add_option("--y", st.y)->required();
  wilcoxon->add_option("--mode", st.mode)->capture_default_str();
  auto* alpha = stats_cmd->add_subcommand("alpha", "Cronbach's alpha");
  alpha->add_option("--items", st.items, "CSV: one respondent per line")->required();

  FixtureArgs fx;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the synthetic 10-user cohort");
  fixtures_cmd->add_option("--out", fx.out)->required();
  fixtures_cmd->add_option("--traces-out", fx.traces_out, "Also sample annotated traces");
  fixtures_cmd->add_option("--turns", fx.turns)->capture_default_str()->check(CLI::PositiveNumber);
  auto* fx_seed = fixtures_cmd->add_option("--seed", fx.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (estimate->parsed()) cmd_estimate(est, out);
    else if (cluster->parsed()) cmd_cluster(clu, out);
    else if (assign->parsed()) cmd_assign(asg, out);
    else if (simulate_cmd->parsed()) cmd_simulate(sim, out);
    else if (compare->parsed()) cmd_compare(cmp, out);
    else if (game_cmd->parsed()) cmd_game(g, in, out);
    else if (ttest->parsed()) cmd_ttest(st, out);
    else if (kappa->parsed()) cmd_kappa(st, out);
    else if (wilcoxon->parsed()) cmd_wilcoxon(st, out);
    else if (alpha->parsed()) cmd_alpha(st, out);
    else if (fixtures_cmd->parsed()) cmd_fixtures(fx, fx_seed->count() > 0, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace engage::cli
