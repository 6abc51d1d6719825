#include "seqclust/trials.hpp"

#include <cstdio>
#include <exception>
#include <stdexcept>
#include <thread>

#include "seqclust/random.hpp"

namespace seqclust {

namespace {

struct TrialOutcome {
  bool error = false;
  int k_hat = 0;
  std::exception_ptr failure;
};

DistanceMetric make_metric(const ScenarioConfig& cfg) {
  return cfg.metric == MetricKind::ks
             ? DistanceMetric::ks_metric()
             : DistanceMetric::mmd2_metric(exponential_kernel(cfg.kernel_scale));
}

ClusterGeometry resolve_geometry(const ScenarioConfig& cfg, const Scenario& scenario,
                                 const DistanceMetric& metric) {
  if (cfg.d_l_override.has_value() != cfg.d_h_override.has_value())
    throw std::invalid_argument("run_trials: supply both d_L and d_H overrides or neither");
  if (cfg.d_l_override) return make_cluster_geometry(*cfg.d_l_override, *cfg.d_h_override);
  return cluster_geometry(scenario.specs, scenario.labels, metric,
                          MmdEstimateOptions{cfg.geometry_mc_samples});
}

TrialOutcome run_one_trial(const ScenarioConfig& cfg, const Scenario& scenario,
                           const DistanceMetric& metric, double d_th, int n, int trial) {
  Rng rng(trial_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(trial)));

  // Random sequence order per trial, so "first center = sequence 0" is
  // distributionally arbitrary.
  std::vector<int> order(kScenarioSequences);
  for (int i = 0; i < kScenarioSequences; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = kScenarioSequences - 1; i > 0; --i) {
    const auto j = rng.uniform_int(static_cast<std::uint64_t>(i) + 1);
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }

  std::vector<DataSequence> seqs;
  std::vector<int> truth;
  seqs.reserve(kScenarioSequences);
  truth.reserve(kScenarioSequences);
  for (int pos = 0; pos < kScenarioSequences; ++pos) {
    const int s = order[static_cast<std::size_t>(pos)];
    seqs.push_back(sample_sequence(scenario.specs[static_cast<std::size_t>(s)],
                                   static_cast<std::size_t>(n), rng));
    truth.push_back(scenario.labels[static_cast<std::size_t>(s)]);
  }

  const auto dist = pairwise_distance_matrix(seqs, metric);
  ClusteringResult result;
  switch (cfg.algorithm) {
    case AlgorithmKind::known_k:
      result = cluster_known_k(dist, kScenarioClusters, cfg.max_iters);
      break;
    case AlgorithmKind::merge:
      result = cluster_merge_based(dist, {d_th, cfg.omega}, cfg.max_iters);
      break;
    case AlgorithmKind::split:
      result = cluster_split_based(dist, {d_th, cfg.omega}, cfg.max_iters);
      break;
  }
  return {!partition_matches_truth(result, truth), result.k_hat, nullptr};
}

}  // namespace

ErrorCurve run_trials(const ScenarioConfig& cfg) {
  if (cfg.sample_sizes.empty()) throw std::invalid_argument("run_trials: no sample sizes");
  for (int n : cfg.sample_sizes) {
    if (n < 1) throw std::invalid_argument("run_trials: sample sizes must be positive");
    if (cfg.metric == MetricKind::mmd2 && n < 2)
      throw std::invalid_argument("run_trials: MMD^2 needs at least 2 samples per sequence");
  }
  if (cfg.trials < 1) throw std::invalid_argument("run_trials: trials must be positive");
  if (cfg.max_iters < 1) throw std::invalid_argument("run_trials: max_iters must be positive");

  const DistanceMetric metric = make_metric(cfg);
  const Scenario scenario = build_scenario(cfg.family, cfg.delta);

  ErrorCurve curve;
  curve.config = cfg;
  curve.geometry = resolve_geometry(cfg, scenario, metric);
  if (!curve.geometry.separated)
    throw std::domain_error("run_trials: scenario geometry has d_L >= d_H");
  if (cfg.algorithm != AlgorithmKind::known_k)
    curve.d_th = threshold_from_omega(curve.geometry, cfg.omega).d_th;

  for (int n : cfg.sample_sizes) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    auto run_slot = [&](int trial) {
      auto& slot = outcomes[static_cast<std::size_t>(trial)];
      try {
        slot = run_one_trial(cfg, scenario, metric, curve.d_th, n, trial);
      } catch (...) {
        slot.failure = std::current_exception();
      }
    };

    const unsigned workers =
        std::min<unsigned>(std::max(1u, cfg.threads), static_cast<unsigned>(cfg.trials));
    if (workers == 1) {
      for (int trial = 0; trial < cfg.trials; ++trial) run_slot(trial);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (int trial = static_cast<int>(w); trial < cfg.trials;
               trial += static_cast<int>(workers))
            run_slot(trial);
        });
      for (auto& t : pool) t.join();
    }

    ErrorCurveRow row;
    row.n = n;
    row.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const auto& slot = outcomes[static_cast<std::size_t>(trial)];
      if (slot.failure) {
        try {
          std::rethrow_exception(slot.failure);
        } catch (const std::exception& e) {
          throw std::runtime_error("trial " + std::to_string(trial) + " at n=" +
                                   std::to_string(n) + " failed: " + e.what());
        }
      }
      row.errors += slot.error ? 1 : 0;
      ++row.k_hat_histogram[slot.k_hat];
    }
    row.p_e = static_cast<double>(row.errors) / static_cast<double>(cfg.trials);
    row.bound = error_bound(cfg.algorithm, cfg.metric, kScenarioSequences, cfg.max_iters, n,
                            curve.geometry.delta, metric.kernel_bound());
    curve.rows.push_back(std::move(row));
  }
  return curve;
}

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string metric_name(MetricKind metric) { return metric == MetricKind::ks ? "ks" : "mmd"; }

std::string algorithm_name(AlgorithmKind algorithm) {
  switch (algorithm) {
    case AlgorithmKind::known_k:
      return "known";
    case AlgorithmKind::merge:
      return "merge";
    case AlgorithmKind::split:
      return "split";
  }
  return "unknown";
}

void write_error_curve_csv(std::ostream& os, const ErrorCurve& curve) {
  os << "family,metric,algorithm,delta,omega,n,trials,errors,p_e,bound,seed\n";
  for (const auto& row : curve.rows) {
    os << family_name(curve.config.family) << ',' << metric_name(curve.config.metric) << ','
       << algorithm_name(curve.config.algorithm) << ',' << format_g17(curve.config.delta) << ','
       << format_g17(curve.config.omega) << ',' << row.n << ',' << row.trials << ','
       << row.errors << ',' << format_g17(row.p_e) << ',' << format_g17(row.bound.value) << ','
       << curve.config.master_seed << '\n';
  }
}

}  // namespace seqclust
