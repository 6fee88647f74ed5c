// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "engage/clustering.hpp"
#include "engage/estimation.hpp"
#include "engage/game.hpp"
#include "engage/simulator.hpp"

namespace engage::io {

/// Malformed or schema-violating input. `what()` names the file location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kTraceHeader = "participant_id,session_id,turn,action,engagement";

// ---- traces (CSV) ----------------------------------------------------------

/// Sessions sorted by (participant_id, session_id). Each session needs a
/// turn-0 "start" row carrying the initial engagement, followed by turns
/// 1, 2, ... in file order.
std::vector<SessionTrace> parse_traces(std::istream& in);
std::vector<SessionTrace> load_traces(const std::filesystem::path& path);
void write_traces(std::ostream& out, std::vector<SessionTrace> traces);
void save_traces(const std::filesystem::path& path, const std::vector<SessionTrace>& traces);

// ---- models (JSON) ---------------------------------------------------------

struct ModelFile {
  std::string participant_id;
  TransitionModel model;
  std::vector<RowKey> unobserved_rows;
};

nlohmann::ordered_json matrix_to_json(const ActionMatrix& m);
ActionMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json model_to_json(const TransitionModel& m);
TransitionModel model_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ModelFile& f);
ModelFile model_file_from_json(const nlohmann::json& j);

void save_model(const std::filesystem::path& path, const ModelFile& f);
ModelFile load_model(const std::filesystem::path& path);

/// A model collection is a JSON array of model objects; a single object is
/// accepted as a collection of one.
void save_models(const std::filesystem::path& path, const std::vector<ModelFile>& files);
std::vector<ModelFile> load_models(const std::filesystem::path& path);

// ---- clusters (JSON) -------------------------------------------------------

/// Participant-level result, or one cluster set per action.
using ClusterFile = std::variant<ClusterSet, std::array<ClusterSet, kNumActions>>;

nlohmann::ordered_json to_json(const ClusterSet& set);
ClusterSet cluster_set_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const ClusterFile& file);
ClusterFile cluster_file_from_json(const nlohmann::json& j);
void save_clusters(const std::filesystem::path& path, const ClusterFile& file);
ClusterFile load_clusters(const std::filesystem::path& path);

// ---- policies and reports (JSON / CSV) -------------------------------------

nlohmann::ordered_json to_json(const PolicySpec& p);
PolicySpec policy_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const stats::TestResult& r);
nlohmann::ordered_json to_json(const Comparison& c);
nlohmann::ordered_json to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::json& j);
void save_report(const std::filesystem::path& path, const SimulationReport& report);
SimulationReport load_report(const std::filesystem::path& path);

/// One row per run: user_id,condition,policy,run,engaged_fraction.
void write_report_csv(std::ostream& out, const SimulationReport& report);

// ---- game ------------------------------------------------------------------

/// CSV with header "turn,thumb_angle"; turn must count up from 1.
std::vector<double> parse_gesture_stream(std::istream& in);
nlohmann::ordered_json to_json(const game::Transcript& t);

// ---- helpers ---------------------------------------------------------------

nlohmann::json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);

}  // namespace engage::io
