// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "engage/fixtures.hpp"
#include "engage/io.hpp"
#include "support.hpp"

using namespace engage;
using namespace engage::io;
using enum EngagementState;
using enum RobotAction;

namespace {

std::vector<SessionTrace> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_traces(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return {};
}

const std::string kHeader = "participant_id,session_id,turn,action,engagement\n";

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("two sessions parse into two sorted traces") {
  const auto traces = parse(kHeader +
                            "P2,S1,0,start,E\n"
                            "P1,S1,0,start,D\n"
                            "P2,S1,1,reward,E\n"
                            "P1,S1,1,encourage,E\n"
                            "P1,S1,2,clarify,D\n");
  REQUIRE(traces.size() == 2);
  CHECK(traces[0].participant_id == "P1");
  CHECK(traces[0].initial_state == Disengaged);
  CHECK(traces[0].turns == std::vector<Turn>{{1, Encourage, Engaged}, {2, Clarify, Disengaged}});
  CHECK(traces[1].participant_id == "P2");
  CHECK(traces[1].turns.size() == 1);
}

TEST_CASE("trace format errors name the row") {
  CHECK(error_of(kHeader + "P1,S1,1,reward,E\n").find("missing its turn 0") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,1,reward,E\n").find("P1/S1") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,start,E\nP1,S1,2,reward,E\n").find("line 3") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,start,E\nP1,S1,1,wave,E\n").find("unknown action") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,start,X\n").find("unknown engagement") != std::string::npos);
  CHECK(error_of("pid,sid,turn,action,state\n").find("line 1") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,start\n").find("5 fields") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,start,E\nP1,S1,0,start,E\n").find("second start") != std::string::npos);
  CHECK(error_of(kHeader + "P1,S1,0,reward,E\n").find("start") != std::string::npos);
}

TEST_CASE("traces round-trip through CSV") {
  std::mt19937_64 gen(81);
  std::vector<SessionTrace> traces;
  for (int i = 0; i < 100; ++i) {
    traces.push_back(testing::random_trace(gen, i % 17, "P" + std::to_string(i / 4),
                                           "S" + std::to_string(i % 4)));
  }
  const auto dir = testing::scratch_dir("io-traces");
  save_traces(dir / "t.csv", traces);
  const auto loaded = load_traces(dir / "t.csv");
  auto sorted = traces;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.participant_id, a.session_id) < std::tie(b.participant_id, b.session_id);
  });
  CHECK(loaded == sorted);
}

TEST_CASE("models round-trip exactly") {
  std::mt19937_64 gen(82);
  const auto dir = testing::scratch_dir("io-models");
  std::vector<ModelFile> files;
  for (int i = 0; i < 50; ++i) {
    files.push_back({"P" + std::to_string(i), testing::random_model(gen), {{Reward, Engaged}}});
    save_model(dir / "m.json", files.back());
    const auto back = load_model(dir / "m.json");
    CHECK(back.participant_id == files.back().participant_id);
    CHECK(back.model == files.back().model);
    CHECK(back.unobserved_rows == files.back().unobserved_rows);
  }
  save_models(dir / "all.json", files);
  const auto all = load_models(dir / "all.json");
  REQUIRE(all.size() == files.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].model == files[i].model);
  // A single object is a collection of one.
  CHECK(load_models(dir / "m.json").size() == 1);
}

TEST_CASE("model schema violations are rejected") {
  const auto dir = testing::scratch_dir("io-bad-models");
  const std::string good_rows = R"([[0.5,0.5],[0.25,0.75]])";
  write_file(dir / "sum.json", R"({"participant_id":"P1","matrices":{"clarify":[[0.5,0.4],[0.5,0.5]],"encourage":)" +
                                   good_rows + R"(,"reward":)" + good_rows + "}}");
  CHECK_THROWS_AS(load_model(dir / "sum.json"), FormatError);
  write_file(dir / "key.json", R"({"participant_id":"P1","matrices":{"clarify":)" + good_rows +
                                   R"(,"encourage":)" + good_rows + R"(,"reward":)" + good_rows +
                                   R"(,"wave":)" + good_rows + "}}");
  CHECK_THROWS_AS(load_model(dir / "key.json"), FormatError);
  write_file(dir / "missing.json", R"({"participant_id":"P1","matrices":{"clarify":)" + good_rows + "}}");
  CHECK_THROWS_AS(load_model(dir / "missing.json"), FormatError);
  write_file(dir / "broken.json", R"({"participant_id":"P1","matrices":)");
  CHECK_THROWS_AS(load_model(dir / "broken.json"), FormatError);
  write_file(dir / "rows.json", R"({"participant_id":"P1","matrices":{"clarify":)" + good_rows +
                                    R"(,"encourage":)" + good_rows + R"(,"reward":)" + good_rows +
                                    R"(},"unobserved_rows":[{"action":"reward","from":"Q"}]})");
  CHECK_THROWS_AS(load_model(dir / "rows.json"), FormatError);
  write_file(dir / "dup.json", "[" + std::string(R"({"participant_id":"P1","matrices":{"clarify":)") + good_rows +
                                   R"(,"encourage":)" + good_rows + R"(,"reward":)" + good_rows + "}}," +
                                   R"({"participant_id":"P1","matrices":{"clarify":)" + good_rows +
                                   R"(,"encourage":)" + good_rows + R"(,"reward":)" + good_rows + "}}]");
  CHECK_THROWS_AS(load_models(dir / "dup.json"), FormatError);
  CHECK_THROWS_AS(load_model(dir / "absent.json"), FormatError);
}

TEST_CASE("cluster files round-trip") {
  const auto cohort = fixtures::synthetic_cohort();
  std::array<std::vector<ModelVector>, 3> per_action;
  std::vector<ModelVector> whole;
  for (const auto& m : cohort) {
    const auto v = vectorize_actions(m.id, m.model);
    for (std::size_t a = 0; a < 3; ++a) per_action[a].push_back(v[a]);
    whole.push_back(vectorize(m.id, m.model));
  }
  const std::array<ClusterSet, 3> sets{agglomerate(per_action[0]), agglomerate(per_action[1]),
                                       agglomerate(per_action[2])};
  const auto dir = testing::scratch_dir("io-clusters");
  save_clusters(dir / "a.json", ClusterFile{sets});
  const auto back = load_clusters(dir / "a.json");
  REQUIRE(std::holds_alternative<std::array<ClusterSet, 3>>(back));
  const auto& loaded = std::get<std::array<ClusterSet, 3>>(back);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(loaded[a].level == sets[a].level);
    REQUIRE(loaded[a].clusters.size() == sets[a].clusters.size());
    for (std::size_t c = 0; c < sets[a].clusters.size(); ++c) {
      CHECK(loaded[a].clusters[c].members == sets[a].clusters[c].members);
      CHECK(loaded[a].clusters[c].centroid.values == sets[a].clusters[c].centroid.values);
    }
  }
  save_clusters(dir / "p.json", ClusterFile{agglomerate(whole)});
  CHECK(std::holds_alternative<ClusterSet>(load_clusters(dir / "p.json")));
  write_file(dir / "bad.json", R"({"level":"galaxy","clusters":[]})");
  CHECK_THROWS_AS(load_clusters(dir / "bad.json"), FormatError);
}

TEST_CASE("reports round-trip and flatten to CSV") {
  const auto cohort = fixtures::synthetic_cohort();
  std::vector<SimulatedUser> users;
  for (const auto& m : cohort) users.push_back({m.id, m.model});
  std::vector<PolicySpec> policies{make_random("random"), make_impersonal("impersonal", cohort[0].model),
                                   make_personalized("personalized", ActionClusterIds{"C0", "C1", "C0"},
                                                     cohort[1].model)};
  policies[1].clarify_noise_p = 0.1;
  SimulationConfig config;
  config.runs = 3;
  config.timesteps = 7;
  config.master_seed = 83;
  auto report = run_experiment(users, policies, config);
  report.comparisons.push_back(compare_conditions(report, "impersonal", "random"));

  const auto dir = testing::scratch_dir("io-report");
  save_report(dir / "r.json", report);
  const auto back = load_report(dir / "r.json");
  CHECK(to_json(back).dump() == to_json(report).dump());
  CHECK(back.results[1].policy.clarify_noise_p == 0.1);

  std::ostringstream csv;
  write_report_csv(csv, report);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "user_id,condition,policy,run,engaged_fraction");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == users.size() * policies.size() * 3);
}

TEST_CASE("gesture streams") {
  std::istringstream ok("turn,thumb_angle\n1,45.5\n2,-60\n3,0\n");
  CHECK(parse_gesture_stream(ok) == std::vector<double>{45.5, -60, 0});
  std::istringstream gap("turn,thumb_angle\n1,45\n3,10\n");
  CHECK_THROWS_AS(parse_gesture_stream(gap), FormatError);
  std::istringstream junk("turn,thumb_angle\n1,forty\n");
  CHECK_THROWS_AS(parse_gesture_stream(junk), FormatError);
  std::istringstream header("t,a\n");
  CHECK_THROWS_AS(parse_gesture_stream(header), FormatError);
}

TEST_CASE("transcript JSON carries the game record") {
  const auto t = game::play_scripted(12, game::honest_oracle(), 4);
  const auto j = to_json(t);
  CHECK(j.at("target") == 12);
  CHECK(j.at("guesses").size() == t.guesses.size());
  CHECK(j.at("entries").size() == t.entries.size());
  CHECK(j.at("up_count") == t.up_count);
}
