#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seqclust/bounds.hpp"
#include "seqclust/geometry.hpp"
#include "seqclust/scenario.hpp"

namespace seqclust {

/// One Monte-Carlo experiment: a simulation family, metric, algorithm, and
/// the sweep of sample sizes to run.
struct ScenarioConfig {
  Family family = Family::gaussian;
  double delta = 0.0;
  MetricKind metric = MetricKind::ks;
  double kernel_scale = 2.0;  // exponential-kernel scale, used iff metric == mmd2
  AlgorithmKind algorithm = AlgorithmKind::known_k;
  double omega = 0.5;  // threshold mix for merge / split
  std::vector<int> sample_sizes;
  int trials = 200;
  std::uint64_t master_seed = 0;
  int max_iters = 100;
  unsigned threads = 1;
  // The paper-style geometry is computable, but d_L / d_H may also be
  // supplied directly (both or neither).
  std::optional<double> d_l_override;
  std::optional<double> d_h_override;
  std::size_t geometry_mc_samples = 1'000'000;
};

struct ErrorCurveRow {
  int n = 0;
  int trials = 0;
  int errors = 0;
  double p_e = 0.0;
  BoundValue bound;
  std::map<int, int> k_hat_histogram;
};

struct ErrorCurve {
  ScenarioConfig config;
  ClusterGeometry geometry;
  double d_th = 0.0;  // 0 when the algorithm is known_k
  std::vector<ErrorCurveRow> rows;
};

/// Runs cfg.trials independent trials per sample size. Trial r at sample size
/// n seeds its own stream with trial_seed(master_seed, n, r), samples the 15
/// scenario sequences in a per-trial random order, clusters them, and judges
/// the partition against ground truth. Trials may run on several threads;
/// the aggregation is by-slot and the output is bit-identical for any thread
/// count. The reported bound takes T = max_iters, an upper bound on any
/// trial's iteration count.
ErrorCurve run_trials(const ScenarioConfig& cfg);

/// CSV with header family,metric,algorithm,delta,omega,n,trials,errors,p_e,bound,seed
/// and one row per sample size. Floating-point fields use 17 significant
/// digits so the values round-trip exactly.
void write_error_curve_csv(std::ostream& os, const ErrorCurve& curve);

/// %.17g rendering used for all CSV floating-point output.
std::string format_g17(double value);

std::string metric_name(MetricKind metric);
std::string algorithm_name(AlgorithmKind algorithm);

}  // namespace seqclust
