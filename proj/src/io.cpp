// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace engage::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  return out;
}

template <typename T>
bool parse_number(const std::string& text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

// ---- traces ----------------------------------------------------------------

std::vector<SessionTrace> parse_traces(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("trace file is empty");
  strip_cr(line);
  if (line != kTraceHeader) {
    throw FormatError("line 1: expected header '" + std::string(kTraceHeader) + "'");
  }

  struct Pending {
    SessionTrace trace;
    bool started = false;
  };
  std::map<std::pair<std::string, std::string>, Pending> sessions;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto fields = split_csv(line);
    if (fields.size() != 5) throw FormatError(where + "expected 5 fields");
    const std::string& pid = fields[0];
    const std::string& sid = fields[1];
    if (pid.empty()) throw FormatError(where + "empty participant_id");
    int turn = 0;
    if (!parse_number(fields[2], turn) || turn < 0) {
      throw FormatError(where + "bad turn '" + fields[2] + "'");
    }
    const auto state = parse_state(fields[4]);
    if (!state) throw FormatError(where + "unknown engagement '" + fields[4] + "'");

    Pending& p = sessions[{pid, sid}];
    const std::string session_name = "session " + pid + "/" + sid;
    if (turn == 0) {
      if (fields[3] != "start") throw FormatError(where + "turn 0 must have action 'start'");
      if (p.started) throw FormatError(where + session_name + " has a second start row");
      p.trace.participant_id = pid;
      p.trace.session_id = sid;
      p.trace.initial_state = *state;
      p.started = true;
      continue;
    }
    if (!p.started) throw FormatError(where + session_name + " is missing its turn 0 start row");
    const auto action = parse_action(fields[3]);
    if (!action) throw FormatError(where + "unknown action '" + fields[3] + "'");
    const int expected = static_cast<int>(p.trace.turns.size()) + 1;
    if (turn != expected) {
      throw FormatError(where + session_name + " has turn " + std::to_string(turn) +
                        " where turn " + std::to_string(expected) + " was expected");
    }
    p.trace.turns.push_back({turn, *action, *state});
  }

  std::vector<SessionTrace> out;
  out.reserve(sessions.size());
  for (auto& [key, p] : sessions) out.push_back(std::move(p.trace));
  return out;
}

std::vector<SessionTrace> load_traces(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return parse_traces(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_traces(std::ostream& out, std::vector<SessionTrace> traces) {
  std::sort(traces.begin(), traces.end(), [](const SessionTrace& a, const SessionTrace& b) {
    return std::tie(a.participant_id, a.session_id) < std::tie(b.participant_id, b.session_id);
  });
  out << kTraceHeader << '\n';
  for (const SessionTrace& t : traces) {
    t.validate();
    if (t.participant_id.find(',') != std::string::npos ||
        t.session_id.find(',') != std::string::npos) {
      throw ValidationError("ids may not contain commas");
    }
    out << t.participant_id << ',' << t.session_id << ",0,start," << to_string(t.initial_state)
        << '\n';
    for (const Turn& turn : t.turns) {
      out << t.participant_id << ',' << t.session_id << ',' << turn.index << ','
          << to_string(turn.action) << ',' << to_string(turn.observed) << '\n';
    }
  }
}

void save_traces(const std::filesystem::path& path, const std::vector<SessionTrace>& traces) {
  auto out = open_out(path);
  write_traces(out, traces);
}

// ---- models ----------------------------------------------------------------

ordered_json matrix_to_json(const ActionMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (EngagementState s : kAllStates) rows.push_back({m.row(s)[0], m.row(s)[1]});
  return rows;
}

ActionMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("matrix must be a 2x2 array");
  std::array<ActionMatrix::Row, 2> rows{};
  for (std::size_t r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2 || !j[r][0].is_number() || !j[r][1].is_number()) {
      throw FormatError("matrix must be a 2x2 array of numbers");
    }
    rows[r] = {j[r][0].get<double>(), j[r][1].get<double>()};
  }
  try {
    return ActionMatrix::from_rows(rows[0], rows[1]);
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
}

ordered_json model_to_json(const TransitionModel& m) {
  ordered_json out = ordered_json::object();
  for (RobotAction a : kAllActions) out[std::string(to_string(a))] = matrix_to_json(m[a]);
  return out;
}

TransitionModel model_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("matrices must be an object keyed by action");
  for (const auto& [key, value] : j.items()) {
    if (!parse_action(key)) throw FormatError("unknown action key '" + key + "'");
  }
  TransitionModel m;
  for (RobotAction a : kAllActions) {
    const std::string key(to_string(a));
    if (!j.contains(key)) throw FormatError("missing matrix for action '" + key + "'");
    try {
      m.set(a, matrix_from_json(j.at(key)));
    } catch (const FormatError& e) {
      throw FormatError(key + ": " + e.what());
    }
  }
  return m;
}

ordered_json to_json(const ModelFile& f) {
  ordered_json rows = ordered_json::array();
  for (const RowKey& k : f.unobserved_rows) {
    rows.push_back({{"action", to_string(k.action)}, {"from", to_string(k.from)}});
  }
  return {{"participant_id", f.participant_id},
          {"matrices", model_to_json(f.model)},
          {"unobserved_rows", rows}};
}

ModelFile model_file_from_json(const json& j) try {
  if (!j.is_object()) throw FormatError("model must be a JSON object");
  if (!j.contains("participant_id") || !j["participant_id"].is_string()) {
    throw FormatError("model needs a string participant_id");
  }
  if (!j.contains("matrices")) throw FormatError("model needs matrices");
  ModelFile f;
  f.participant_id = j["participant_id"].get<std::string>();
  f.model = model_from_json(j["matrices"]);
  if (j.contains("unobserved_rows")) {
    for (const json& r : j["unobserved_rows"]) {
      const auto a = parse_action(r.value("action", ""));
      const auto s = parse_state(r.value("from", ""));
      if (!a || !s) throw FormatError("bad unobserved_rows entry");
      f.unobserved_rows.push_back({*a, *s});
    }
  }
  return f;
} catch (const json::exception& e) {
  throw FormatError(std::string("model: ") + e.what());
}

void save_model(const std::filesystem::path& path, const ModelFile& f) {
  write_json(path, to_json(f));
}

ModelFile load_model(const std::filesystem::path& path) {
  try {
    return model_file_from_json(read_json(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_models(const std::filesystem::path& path, const std::vector<ModelFile>& files) {
  ordered_json arr = ordered_json::array();
  for (const ModelFile& f : files) arr.push_back(to_json(f));
  write_json(path, arr);
}

std::vector<ModelFile> load_models(const std::filesystem::path& path) {
  try {
    const json j = read_json(path);
    std::vector<ModelFile> out;
    if (j.is_array()) {
      for (const json& item : j) out.push_back(model_file_from_json(item));
    } else {
      out.push_back(model_file_from_json(j));
    }
    std::set<std::string> ids;
    for (const ModelFile& f : out) {
      if (!ids.insert(f.participant_id).second) {
        throw FormatError("duplicate participant_id " + f.participant_id);
      }
    }
    return out;
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

// ---- clusters --------------------------------------------------------------

ordered_json to_json(const ClusterSet& set) {
  ordered_json clusters = ordered_json::array();
  for (const Cluster& c : set.clusters) {
    ordered_json entry{{"cluster_id", c.cluster_id},
                       {"members", c.members},
                       {"centroid", c.centroid.values}};
    if (set.level.is_participant()) {
      entry["matrices"] = model_to_json(centroid_to_model(c.centroid));
    } else {
      entry["matrix"] = matrix_to_json(centroid_to_matrix(c.centroid));
    }
    clusters.push_back(std::move(entry));
  }
  return {{"level", set.level.name()}, {"clusters", clusters}};
}

ClusterSet cluster_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("clusters")) {
    throw FormatError("cluster set needs 'level' and 'clusters'");
  }
  const auto level = VectorLevel::parse(j["level"].get<std::string>());
  if (!level) throw FormatError("unknown cluster level");
  ClusterSet set;
  set.level = *level;
  for (const json& c : j["clusters"]) {
    Cluster cluster;
    cluster.cluster_id = c.at("cluster_id").get<std::string>();
    cluster.members = c.at("members").get<std::vector<std::string>>();
    cluster.centroid = {cluster.cluster_id, *level, c.at("centroid").get<std::vector<double>>()};
    try {
      cluster.centroid.validate();
    } catch (const ValidationError& e) {
      throw FormatError("cluster " + cluster.cluster_id + ": " + e.what());
    }
    set.clusters.push_back(std::move(cluster));
  }
  return set;
}

ordered_json to_json(const ClusterFile& file) {
  if (const auto* set = std::get_if<ClusterSet>(&file)) return to_json(*set);
  const auto& sets = std::get<std::array<ClusterSet, kNumActions>>(file);
  ordered_json actions = ordered_json::object();
  for (RobotAction a : kAllActions) actions[std::string(to_string(a))] = to_json(sets[index_of(a)]);
  return {{"level", "action"}, {"actions", actions}};
}

ClusterFile cluster_file_from_json(const json& j) {
  try {
    if (j.value("level", "") != "action") return cluster_set_from_json(j);
    std::array<ClusterSet, kNumActions> sets;
    for (RobotAction a : kAllActions) {
      sets[index_of(a)] = cluster_set_from_json(j.at("actions").at(std::string(to_string(a))));
      if (!(sets[index_of(a)].level == VectorLevel::for_action(a))) {
        throw FormatError("cluster set under '" + std::string(to_string(a)) +
                          "' has the wrong level");
      }
    }
    return sets;
  } catch (const json::exception& e) {
    throw FormatError(std::string("cluster file: ") + e.what());
  }
}

void save_clusters(const std::filesystem::path& path, const ClusterFile& file) {
  write_json(path, to_json(file));
}

ClusterFile load_clusters(const std::filesystem::path& path) {
  try {
    return cluster_file_from_json(read_json(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

// ---- policies and reports --------------------------------------------------

ordered_json to_json(const PolicySpec& p) {
  ordered_json out{{"label", p.label}, {"kind", p.kind_name()}, {"action_set", to_string(p.action_set)}};
  out["clarify_noise_p"] = p.clarify_noise_p ? ordered_json(*p.clarify_noise_p) : ordered_json(nullptr);
  if (const auto* g = std::get_if<PersonalizedGreedy>(&p.kind)) {
    if (const auto* id = std::get_if<std::string>(&g->assignment)) {
      out["assignment"] = {{"participant", *id}};
    } else {
      const auto& ids = std::get<ActionClusterIds>(g->assignment);
      ordered_json a = ordered_json::object();
      for (RobotAction act : kAllActions) a[std::string(to_string(act))] = ids[index_of(act)];
      out["assignment"] = a;
    }
    out["belief"] = model_to_json(g->belief);
  } else if (const auto* imp = std::get_if<Impersonal>(&p.kind)) {
    out["belief"] = model_to_json(imp->model);
  }
  return out;
}

PolicySpec policy_from_json(const json& j) {
  PolicySpec p;
  p.label = j.at("label").get<std::string>();
  const auto set = parse_action_set(j.value("action_set", "all"));
  if (!set) throw FormatError("unknown action_set");
  p.action_set = *set;
  if (j.contains("clarify_noise_p") && !j["clarify_noise_p"].is_null()) {
    p.clarify_noise_p = j["clarify_noise_p"].get<double>();
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "random") {
    p.kind = RandomChoice{};
  } else if (kind == "impersonal") {
    p.kind = Impersonal{model_from_json(j.at("belief"))};
  } else if (kind == "personalized") {
    const json& a = j.at("assignment");
    ClusterAssignment assignment;
    if (a.contains("participant")) {
      assignment = a["participant"].get<std::string>();
    } else {
      ActionClusterIds ids;
      for (RobotAction act : kAllActions) ids[index_of(act)] = a.at(std::string(to_string(act))).get<std::string>();
      assignment = ids;
    }
    p.kind = PersonalizedGreedy{assignment, model_from_json(j.at("belief"))};
  } else {
    throw FormatError("unknown policy kind '" + kind + "'");
  }
  return p;
}

ordered_json to_json(const stats::TestResult& r) {
  return {{"statistic", r.statistic},
          {"df", r.df ? ordered_json(*r.df) : ordered_json(nullptr)},
          {"p_value", r.p_value},
          {"method", r.method}};
}

ordered_json to_json(const Comparison& c) {
  return {{"condition", c.condition},
          {"baseline", c.baseline},
          {"pairs", c.pairs},
          {"condition_mean", c.condition_mean},
          {"baseline_mean", c.baseline_mean},
          {"test", to_json(c.test)}};
}

ordered_json to_json(const SimulationReport& report) {
  const SimulationConfig& c = report.config;
  ordered_json config{{"timesteps", c.timesteps},
                      {"runs", c.runs},
                      {"clarify_noise_p", c.clarify_noise_p},
                      {"initial_state", to_string(c.initial_state)},
                      {"master_seed", c.master_seed}};
  ordered_json results = ordered_json::array();
  for (const TrialResult& r : report.results) {
    results.push_back({{"user_id", r.user_id},
                       {"condition", r.condition},
                       {"policy", to_json(r.policy)},
                       {"clarify_noise_p", r.clarify_noise_p},
                       {"mean_engaged_fraction", r.mean_fraction},
                       {"run_fractions", r.run_fractions}});
  }
  ordered_json comparisons = ordered_json::array();
  for (const Comparison& cmp : report.comparisons) comparisons.push_back(to_json(cmp));
  return {{"config", config},
          {"seed", c.master_seed},
          {"results", results},
          {"comparisons", comparisons}};
}

SimulationReport report_from_json(const json& j) {
  try {
    SimulationReport report;
    const json& c = j.at("config");
    report.config.timesteps = c.at("timesteps").get<int>();
    report.config.runs = c.at("runs").get<int>();
    report.config.clarify_noise_p = c.at("clarify_noise_p").get<double>();
    const auto init = parse_state(c.at("initial_state").get<std::string>());
    if (!init) throw FormatError("bad initial_state");
    report.config.initial_state = *init;
    report.config.master_seed = c.at("master_seed").get<std::uint64_t>();
    for (const json& r : j.at("results")) {
      TrialResult t;
      t.user_id = r.at("user_id").get<std::string>();
      t.condition = r.at("condition").get<std::string>();
      t.policy = policy_from_json(r.at("policy"));
      t.clarify_noise_p = r.at("clarify_noise_p").get<double>();
      t.mean_fraction = r.at("mean_engaged_fraction").get<double>();
      t.run_fractions = r.at("run_fractions").get<std::vector<double>>();
      report.results.push_back(std::move(t));
    }
    for (const json& cmp : j.value("comparisons", json::array())) {
      Comparison out;
      out.condition = cmp.at("condition").get<std::string>();
      out.baseline = cmp.at("baseline").get<std::string>();
      out.pairs = cmp.at("pairs").get<std::size_t>();
      out.condition_mean = cmp.at("condition_mean").get<double>();
      out.baseline_mean = cmp.at("baseline_mean").get<double>();
      const json& t = cmp.at("test");
      out.test.statistic = t.at("statistic").get<double>();
      if (!t.at("df").is_null()) out.test.df = t["df"].get<double>();
      out.test.p_value = t.at("p_value").get<double>();
      out.test.method = t.at("method").get<std::string>();
      report.comparisons.push_back(std::move(out));
    }
    return report;
  } catch (const json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
}

void save_report(const std::filesystem::path& path, const SimulationReport& report) {
  write_json(path, to_json(report));
}

SimulationReport load_report(const std::filesystem::path& path) {
  try {
    return report_from_json(read_json(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_report_csv(std::ostream& out, const SimulationReport& report) {
  out << "user_id,condition,policy,run,engaged_fraction\n";
  const auto old_precision = out.precision(17);
  for (const TrialResult& r : report.results) {
    for (std::size_t k = 0; k < r.run_fractions.size(); ++k) {
      out << r.user_id << ',' << r.condition << ',' << r.policy.label << ',' << k << ','
          << r.run_fractions[k] << '\n';
    }
  }
  out.precision(old_precision);
}

// ---- game ------------------------------------------------------------------

std::vector<double> parse_gesture_stream(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("gesture file is empty");
  strip_cr(line);
  if (line != "turn,thumb_angle") throw FormatError("line 1: expected header 'turn,thumb_angle'");
  std::vector<double> angles;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto fields = split_csv(line);
    int turn = 0;
    double angle = 0.0;
    if (fields.size() != 2 || !parse_number(fields[0], turn)) throw FormatError(where + "bad row");
    try {
      std::size_t used = 0;
      angle = std::stod(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw FormatError(where + "bad thumb_angle '" + fields[1] + "'");
    }
    if (turn != static_cast<int>(angles.size()) + 1) {
      throw FormatError(where + "turn " + std::to_string(turn) + " out of sequence");
    }
    angles.push_back(angle);
  }
  return angles;
}

ordered_json to_json(const game::Transcript& t) {
  ordered_json entries = ordered_json::array();
  for (const game::TranscriptEntry& e : t.entries) {
    entries.push_back({{"turn", e.turn},
                       {"question", game::to_string(e.question)},
                       {"guess", e.guess},
                       {"attempt", e.attempt},
                       {"answer", game::to_string(e.answer)},
                       {"thumb_angle", e.thumb_angle},
                       {"perceived_angle", e.perceived_angle},
                       {"feedback", to_string(e.feedback)}});
  }
  return {{"target", t.target},
          {"seed", t.seed},
          {"guesses", t.guesses},
          {"entries", entries},
          {"up_count", t.up_count},
          {"down_count", t.down_count},
          {"preferred_side_always_available", t.preferred_side_always_available},
          {"replay_requested", t.replay_requested}};
}

// ---- helpers ---------------------------------------------------------------

json read_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": malformed JSON: " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace engage::io
