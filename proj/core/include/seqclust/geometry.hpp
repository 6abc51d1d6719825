#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqclust/distance.hpp"
#include "seqclust/distributions.hpp"
#include "seqclust/unknown_k.hpp"

namespace seqclust {

/// Worst-case cluster geometry of a set of distribution clusters:
///   d_l    largest intra-cluster distribution distance
///   d_h    smallest inter-cluster distribution distance
///   sigma  d_h + d_l
///   delta  d_h - d_l
/// separated flags the d_l < d_h regime the error bounds assume.
struct ClusterGeometry {
  double d_l = 0.0;
  double d_h = 0.0;
  double sigma = 0.0;
  double delta = 0.0;
  bool separated = false;
};

ClusterGeometry make_cluster_geometry(double d_l, double d_h);

/// A distribution-level distance value; std_error is nonzero only for the
/// Monte-Carlo MMD^2 estimate.
struct DistributionDistance {
  double value = 0.0;
  double std_error = 0.0;
};

/// Options for the MMD^2 Monte-Carlo estimator between distributions. The
/// seed is fixed and independent of any trial seeds.
struct MmdEstimateOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0x67656f6d65747279ULL;
};

/// Distance between two analytic distributions.
/// KS: supremum of |F_p - F_q| located by a dense grid over the pooled
/// 1e-6 .. 1-1e-6 quantile range with local refinement (absolute error
/// well below 1e-9). MMD^2: sample mean of g(x,x') + g(y,y') - g(x,y) -
/// g(x',y') over independently drawn quadruples, with its standard error.
DistributionDistance dist_between_distributions(const DistributionSpec& p,
                                                const DistributionSpec& q,
                                                const DistanceMetric& metric,
                                                const MmdEstimateOptions& mc = {});

/// Cluster geometry of labeled distribution specs. Intra distances are the
/// max over within-cluster pairs (0 for singletons), inter distances the min
/// over cross pairs. Needs at least two clusters.
ClusterGeometry cluster_geometry(std::span<const DistributionSpec> specs,
                                 std::span<const int> labels, const DistanceMetric& metric,
                                 const MmdEstimateOptions& mc = {});

/// d_th = omega * d_L + (1 - omega) * d_H; omega must lie strictly in (0, 1)
/// and the geometry must be separated.
ThresholdConfig threshold_from_omega(const ClusterGeometry& geom, double omega);

}  // namespace seqclust
