#pragma once

#include <span>
#include <string>
#include <vector>

#include "seqclust/distributions.hpp"
#include "seqclust/kmedoids.hpp"

namespace seqclust {

enum class Family { gaussian, gamma };

inline constexpr int kScenarioClusters = 5;
inline constexpr int kScenarioSpecsPerCluster = 3;
inline constexpr int kScenarioSequences = kScenarioClusters * kScenarioSpecsPerCluster;

struct Scenario {
  std::vector<DistributionSpec> specs;  // cluster-major, parameter ascending
  std::vector<int> labels;              // ground-truth cluster id per spec
};

/// The 5-cluster / 3-per-cluster simulation family:
///   gaussian: means {k - delta, k, k + delta}, unit variance, k = 1..5
///   gamma:    shapes {2.5k + 1 - delta, 2.5k + 1, 2.5k + 1 + delta}, unit scale
/// At delta = 0 the three specs of a cluster coincide.
Scenario build_scenario(Family family, double delta);

/// True iff the result partition equals the ground-truth partition as an
/// unordered set of sets (cluster ids may be permuted). A wrong cluster
/// count always fails.
bool partition_matches_truth(const ClusteringResult& result, std::span<const int> labels);

std::string family_name(Family family);

}  // namespace seqclust
