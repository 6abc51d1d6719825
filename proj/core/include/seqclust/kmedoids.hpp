#pragma once

#include <vector>

#include "seqclust/distance.hpp"

namespace seqclust {

struct ClusteringResult {
  std::vector<int> assignment;  // cluster id per sequence, contiguous in [0, k_hat)
  std::vector<int> medoids;     // sequence index per cluster id
  int iterations = 0;           // completed outer-loop passes
  bool converged = false;       // true iff one further pass would change nothing
  int k_hat = 0;
  bool forced_singleton = false;  // an emptied cluster was repaired to its center
  // Objective after initialization and after every center-update / cluster-update
  // half-step (merge-based runs also record the value after each merge pass,
  // where the objective may legitimately rise).
  std::vector<double> objective_trace;
};

/// Farthest-first center initialization. The first center is sequence 0; each
/// subsequent center maximizes the minimum distance to the existing centers,
/// ties broken by lowest index.
std::vector<int> init_centers_known_k(const PairwiseDistanceMatrix& dist, int k);

/// Fresh assignment: every sequence goes to its nearest center, ties broken by
/// lowest center position.
std::vector<int> assign_to_centers(const PairwiseDistanceMatrix& dist,
                                   const std::vector<int>& centers);

/// Incremental assignment: a sequence moves only if some center is strictly
/// closer than its current one (ties keep the current assignment). Sequences
/// that are themselves centers always belong to their own cluster.
std::vector<int> reassign_strict(const PairwiseDistanceMatrix& dist,
                                 const std::vector<int>& centers,
                                 const std::vector<int>& current);

/// Per cluster, the member minimizing the within-cluster distance sum; ties
/// broken by lowest index. Throws if any cluster is empty.
std::vector<int> update_medoids(const PairwiseDistanceMatrix& dist,
                                const std::vector<int>& assignment, int num_clusters);

/// Sum over sequences of the distance to their cluster's medoid.
double clustering_objective(const PairwiseDistanceMatrix& dist, const std::vector<int>& assignment,
                            const std::vector<int>& medoids);

/// Reassigns each center of an empty cluster back to its own cluster.
/// Returns true if anything changed.
bool repair_empty_clusters(const std::vector<int>& centers, std::vector<int>& assignment);

/// Alternating medoid-update / cluster-update loop with farthest-first
/// initialization, for a known number of clusters.
ClusteringResult cluster_known_k(const PairwiseDistanceMatrix& dist, int k, int max_iters = 100);

}  // namespace seqclust
