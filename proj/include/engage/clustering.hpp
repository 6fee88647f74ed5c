// Copyright 2026 The Engage Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "engage/types.hpp"

namespace engage {

/// Resolution at which users are compared: the whole model (12 values) or a
/// single action's matrix (4 values).
class VectorLevel {
 public:
  static VectorLevel participant() { return VectorLevel{}; }
  static VectorLevel for_action(RobotAction a) { return VectorLevel{a}; }

  bool is_participant() const { return !action_.has_value(); }
  /// Precondition: !is_participant().
  RobotAction action() const { return *action_; }
  std::size_t dimension() const { return is_participant() ? 12 : 4; }

  /// "participant" or "action:<name>".
  std::string name() const;
  static std::optional<VectorLevel> parse(std::string_view text);

  friend bool operator==(const VectorLevel&, const VectorLevel&) = default;

 private:
  VectorLevel() = default;
  explicit VectorLevel(RobotAction a) : action_(a) {}
  std::optional<RobotAction> action_;
};

/// Row-major flattening of one matrix, or of all three in canonical action order.
struct ModelVector {
  std::string owner_id;
  VectorLevel level = VectorLevel::participant();
  std::vector<double> values;

  /// Length matches the level; entries in [0,1]; each embedded row sums to 1.
  void validate() const;
};

ModelVector vectorize(const std::string& owner_id, const TransitionModel& model);
ModelVector vectorize(const std::string& owner_id, const ActionMatrix& matrix, RobotAction action);
std::array<ModelVector, kNumActions> vectorize_actions(const std::string& owner_id,
                                                        const TransitionModel& model);

/// dot(u,v) / (|u| |v|). Throws on level/length mismatch or a zero vector.
double cosine_similarity(const ModelVector& u, const ModelVector& v);
double cosine_similarity(std::span<const double> u, std::span<const double> v);

/// Participant-level vector back to a model; each row is renormalized.
TransitionModel centroid_to_model(const ModelVector& centroid);
/// Action-level vector back to a matrix; each row is renormalized.
ActionMatrix centroid_to_matrix(const ModelVector& centroid);

enum class CentroidWeighting { Unweighted, MemberWeighted };

struct AgglomerateOptions {
  std::size_t min_cluster_size = 2;
  CentroidWeighting weighting = CentroidWeighting::Unweighted;
};

struct Cluster {
  std::string cluster_id;
  ModelVector centroid;
  std::vector<std::string> members;
};

/// One merge of the agglomeration, by position in the active list at the time.
struct MergeStep {
  std::size_t first = 0;
  std::size_t second = 0;
  double similarity = 0.0;
};

struct ClusterSet {
  VectorLevel level = VectorLevel::participant();
  std::vector<Cluster> clusters;
  /// Empty unless produced by agglomerate.
  std::vector<MergeStep> merges;

  /// Throws ValidationError when the id is unknown.
  const Cluster& find(const std::string& cluster_id) const;
  /// Id of the cluster that lists `owner_id` as a member, if any.
  std::optional<std::string> cluster_of(const std::string& owner_id) const;
};

/// Iterative merging of the most cosine-similar pair of current clusters.
///
/// Each cluster is represented by its centroid; merging replaces the pair by
/// the mean of the two centroids (or the member-weighted mean when asked).
/// Merging stops at the first configuration in which no cluster is smaller
/// than `min_cluster_size`. Similarity ties go to the lexicographically lowest
/// (i, j) pair of positions, where clusters are kept ordered by their first
/// input member. Output clusters are numbered C0, C1, ... in that same order
/// and list members in input order.
ClusterSet agglomerate(std::span<const ModelVector> vectors, const AgglomerateOptions& options = {});

/// Cluster with the most similar centroid; ties go to the smaller cluster_id.
std::string assign_cluster(const ModelVector& vector, const ClusterSet& clusters);

}  // namespace engage
