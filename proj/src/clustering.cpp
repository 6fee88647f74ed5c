// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#include "engage/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace engage {

std::string VectorLevel::name() const {
  if (is_participant()) return "participant";
  return "action:" + std::string(to_string(*action_));
}

std::optional<VectorLevel> VectorLevel::parse(std::string_view text) {
  if (text == "participant") return participant();
  constexpr std::string_view prefix = "action:";
  if (text.substr(0, prefix.size()) == prefix) {
    if (auto a = parse_action(text.substr(prefix.size()))) return for_action(*a);
  }
  return std::nullopt;
}

void ModelVector::validate() const {
  if (values.size() != level.dimension()) {
    throw ValidationError("vector for " + owner_id + " has " + std::to_string(values.size()) +
                          " values; level " + level.name() + " needs " +
                          std::to_string(level.dimension()));
  }
  for (std::size_t r = 0; r < values.size(); r += 2) {
    validate_probability_row({values[r], values[r + 1]});
  }
}

namespace {

void append_matrix(std::vector<double>& out, const ActionMatrix& m) {
  for (EngagementState from : kAllStates) {
    for (EngagementState to : kAllStates) out.push_back(m(from, to));
  }
}

ActionMatrix matrix_from_values(std::span<const double> v) {
  auto normalized = [](double a, double b) -> ActionMatrix::Row {
    const double sum = a + b;
    if (!(sum > 0.0)) throw ValidationError("centroid row sums to zero");
    return {a / sum, b / sum};
  };
  return ActionMatrix::from_rows(normalized(v[0], v[1]), normalized(v[2], v[3]));
}

}  // namespace

ModelVector vectorize(const std::string& owner_id, const TransitionModel& model) {
  ModelVector v{owner_id, VectorLevel::participant(), {}};
  v.values.reserve(12);
  for (RobotAction a : kAllActions) append_matrix(v.values, model[a]);
  return v;
}

ModelVector vectorize(const std::string& owner_id, const ActionMatrix& matrix, RobotAction action) {
  ModelVector v{owner_id, VectorLevel::for_action(action), {}};
  v.values.reserve(4);
  append_matrix(v.values, matrix);
  return v;
}

std::array<ModelVector, kNumActions> vectorize_actions(const std::string& owner_id,
                                                        const TransitionModel& model) {
  return {vectorize(owner_id, model[RobotAction::Clarify], RobotAction::Clarify),
          vectorize(owner_id, model[RobotAction::Encourage], RobotAction::Encourage),
          vectorize(owner_id, model[RobotAction::Reward], RobotAction::Reward)};
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw ValidationError("cosine similarity: length mismatch");
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) throw ValidationError("cosine similarity: zero vector");
  return dot / (std::sqrt(uu) * std::sqrt(vv));
}

double cosine_similarity(const ModelVector& u, const ModelVector& v) {
  if (!(u.level == v.level)) {
    throw ValidationError("cosine similarity: level " + u.level.name() + " vs " + v.level.name());
  }
  return cosine_similarity(std::span<const double>(u.values), std::span<const double>(v.values));
}

TransitionModel centroid_to_model(const ModelVector& centroid) {
  if (!centroid.level.is_participant() || centroid.values.size() != 12) {
    throw ValidationError("centroid_to_model needs a participant-level vector");
  }
  TransitionModel model;
  std::span<const double> all(centroid.values);
  for (RobotAction a : kAllActions) model.set(a, matrix_from_values(all.subspan(4 * index_of(a), 4)));
  return model;
}

ActionMatrix centroid_to_matrix(const ModelVector& centroid) {
  if (centroid.level.is_participant() || centroid.values.size() != 4) {
    throw ValidationError("centroid_to_matrix needs an action-level vector");
  }
  return matrix_from_values(centroid.values);
}

const Cluster& ClusterSet::find(const std::string& cluster_id) const {
  for (const Cluster& c : clusters) {
    if (c.cluster_id == cluster_id) return c;
  }
  throw ValidationError("unknown cluster id " + cluster_id + " at level " + level.name());
}

std::optional<std::string> ClusterSet::cluster_of(const std::string& owner_id) const {
  for (const Cluster& c : clusters) {
    if (std::find(c.members.begin(), c.members.end(), owner_id) != c.members.end()) {
      return c.cluster_id;
    }
  }
  return std::nullopt;
}

namespace {

struct WorkingCluster {
  std::vector<double> centroid;
  std::vector<std::size_t> members;  // input indices, ascending
};

bool has_small_cluster(const std::vector<WorkingCluster>& clusters, std::size_t floor) {
  return std::any_of(clusters.begin(), clusters.end(),
                     [floor](const WorkingCluster& c) { return c.members.size() < floor; });
}

}  // namespace

ClusterSet agglomerate(std::span<const ModelVector> vectors, const AgglomerateOptions& options) {
  if (options.min_cluster_size == 0) throw ValidationError("min_cluster_size must be at least 1");
  if (vectors.size() < options.min_cluster_size) {
    throw ValidationError("agglomerate: " + std::to_string(vectors.size()) +
                          " vectors cannot form clusters of at least " +
                          std::to_string(options.min_cluster_size));
  }
  const VectorLevel level = vectors.front().level;
  std::set<std::string> seen;
  std::vector<WorkingCluster> active;
  active.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const ModelVector& v = vectors[i];
    if (!(v.level == level)) throw ValidationError("agglomerate: mixed vector levels");
    v.validate();
    if (!seen.insert(v.owner_id).second) {
      throw ValidationError("agglomerate: duplicate owner id " + v.owner_id);
    }
    active.push_back({v.values, {i}});
  }

  std::vector<MergeStep> merges;
  while (has_small_cluster(active, options.min_cluster_size)) {
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double s = cosine_similarity(std::span<const double>(active[i].centroid),
                                           std::span<const double>(active[j].centroid));
        if (s > best) {
          best = s;
          best_i = i;
          best_j = j;
        }
      }
    }
    merges.push_back({best_i, best_j, best});
    WorkingCluster& keep = active[best_i];
    WorkingCluster& gone = active[best_j];
    double w_keep = 0.5;
    double w_gone = 0.5;
    if (options.weighting == CentroidWeighting::MemberWeighted) {
      const double total = static_cast<double>(keep.members.size() + gone.members.size());
      w_keep = static_cast<double>(keep.members.size()) / total;
      w_gone = static_cast<double>(gone.members.size()) / total;
    }
    for (std::size_t k = 0; k < keep.centroid.size(); ++k) {
      keep.centroid[k] = w_keep * keep.centroid[k] + w_gone * gone.centroid[k];
    }
    keep.members.insert(keep.members.end(), gone.members.begin(), gone.members.end());
    std::sort(keep.members.begin(), keep.members.end());
    // best_i < best_j, so the kept cluster's first member is still the
    // smaller one and the ordering by first member is preserved.
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
  }

  ClusterSet out;
  out.level = level;
  out.merges = std::move(merges);
  for (std::size_t c = 0; c < active.size(); ++c) {
    Cluster cluster;
    cluster.cluster_id = "C" + std::to_string(c);
    cluster.centroid = ModelVector{cluster.cluster_id, level, active[c].centroid};
    for (std::size_t idx : active[c].members) cluster.members.push_back(vectors[idx].owner_id);
    out.clusters.push_back(std::move(cluster));
  }
  return out;
}

std::string assign_cluster(const ModelVector& vector, const ClusterSet& clusters) {
  if (clusters.clusters.empty()) throw ValidationError("assign_cluster: empty cluster set");
  if (!(vector.level == clusters.level)) {
    throw ValidationError("assign_cluster: vector level " + vector.level.name() +
                          " does not match cluster level " + clusters.level.name());
  }
  const Cluster* best = nullptr;
  double best_sim = -std::numeric_limits<double>::infinity();
  for (const Cluster& c : clusters.clusters) {
    const double s = cosine_similarity(vector, c.centroid);
    if (s > best_sim || (s == best_sim && c.cluster_id < best->cluster_id)) {
      best_sim = s;
      best = &c;
    }
  }
  return best->cluster_id;
}

}  // namespace engage
