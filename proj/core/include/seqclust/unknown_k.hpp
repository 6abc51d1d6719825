#pragma once

#include <utility>
#include <vector>

#include "seqclust/kmedoids.hpp"

namespace seqclust {

/// Distance threshold separating "same cluster" from "different cluster".
/// When derived from cluster geometry, d_th = omega * d_L + (1 - omega) * d_H.
struct ThresholdConfig {
  double d_th = 0.0;
  double omega = 0.5;
};

/// Threshold-driven center generation: starting from sequence 0, keeps adding
/// the sequence farthest from its nearest center while that distance exceeds
/// d_th, then assigns every sequence to its nearest center.
/// Returns (centers, assignment).
std::pair<std::vector<int>, std::vector<int>> merge_init(const PairwiseDistanceMatrix& dist,
                                                         const ThresholdConfig& threshold);

/// Repeatedly merges the first ordered center pair within d_th of each other:
/// the center whose rival fits the absorbed members better survives, the other
/// is deleted, and the scan restarts. Returns the surviving (centers, assignment).
std::pair<std::vector<int>, std::vector<int>> merge_centers(const PairwiseDistanceMatrix& dist,
                                                            std::vector<int> centers,
                                                            std::vector<int> assignment,
                                                            const ThresholdConfig& threshold);

/// Merge-based clustering for an unknown cluster count: over-generate centers,
/// then alternate center update, merge step, and cluster update.
ClusteringResult cluster_merge_based(const PairwiseDistanceMatrix& dist,
                                     const ThresholdConfig& threshold, int max_iters = 100);

/// Split-based clustering for an unknown cluster count: start from one cluster
/// and repeatedly promote the sequence farthest from its cluster's center to a
/// new center while that distance exceeds d_th.
ClusteringResult cluster_split_based(const PairwiseDistanceMatrix& dist,
                                     const ThresholdConfig& threshold, int max_iters = 100);

}  // namespace seqclust
