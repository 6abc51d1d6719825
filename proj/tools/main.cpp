// seqclust command-line tool: cluster user-supplied sequences or run the
// Monte-Carlo simulation harness and emit CSV.
//
// Exit codes: 0 success, 2 invalid arguments, 3 input parse failure,
// 4 runtime failure.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqclust/geometry.hpp"
#include "seqclust/random.hpp"
#include "seqclust/trials.hpp"
#include "seqclust/unknown_k.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitParseFailure = 3;
constexpr int kExitRuntimeFailure = 4;

struct InputParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadArguments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<seqclust::DataSequence> read_sequences(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputParseError("cannot open input file: " + path);

  std::vector<seqclust::DataSequence> seqs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    std::vector<double> values;
    const char* ptr = line.data();
    const char* end = line.data() + line.size();
    while (ptr < end) {
      while (ptr < end && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
      double v = 0.0;
      const auto [next, ec] = std::from_chars(ptr, end, v);
      if (ec != std::errc())
        throw InputParseError(path + ":" + std::to_string(line_no) + ": malformed sample value");
      ptr = next;
      values.push_back(v);
      while (ptr < end && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
      if (ptr < end) {
        if (*ptr != ',')
          throw InputParseError(path + ":" + std::to_string(line_no) + ": expected ','");
        ++ptr;
        if (ptr == end)
          throw InputParseError(path + ":" + std::to_string(line_no) + ": trailing ','");
      }
    }
    if (values.empty())
      throw InputParseError(path + ":" + std::to_string(line_no) + ": empty sequence");
    try {
      seqs.emplace_back(std::move(values));
    } catch (const std::invalid_argument& e) {
      throw InputParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (seqs.size() < 2) throw InputParseError(path + ": need at least 2 sequences");
  return seqs;
}

struct ClusterOptions {
  std::string input;
  std::string metric = "ks";
  double kernel_scale = 2.0;
  std::optional<int> k;
  std::optional<double> d_th;
  double omega = 0.5;
  std::optional<double> d_l;
  std::optional<double> d_h;
  std::string algorithm = "known";
  int max_iters = 100;
  std::string output;
};

int run_cluster(const ClusterOptions& opt) {
  const auto seqs = read_sequences(opt.input);

  const seqclust::DistanceMetric metric =
      opt.metric == "ks"
          ? seqclust::DistanceMetric::ks_metric()
          : seqclust::DistanceMetric::mmd2_metric(seqclust::exponential_kernel(opt.kernel_scale));

  seqclust::ThresholdConfig threshold{0.0, opt.omega};
  if (opt.algorithm == "known") {
    if (!opt.k) throw BadArguments("--k is required with --algorithm known");
    if (opt.d_th || opt.d_l || opt.d_h)
      throw BadArguments("--dth/--dl/--dh do not apply to --algorithm known");
    if (*opt.k < 1 || *opt.k > static_cast<int>(seqs.size()))
      throw BadArguments("--k must lie in [1, number of sequences]");
  } else {
    if (opt.k) throw BadArguments("--k only applies to --algorithm known");
    if (opt.d_th) {
      if (opt.d_l || opt.d_h) throw BadArguments("give either --dth or --dl/--dh, not both");
      if (opt.metric == "ks" && !(*opt.d_th > 0.0))
        throw BadArguments("--dth must be positive for the KS metric");
      threshold.d_th = *opt.d_th;
    } else {
      if (!opt.d_l || !opt.d_h)
        throw BadArguments("--algorithm merge/split needs --dth, or --dl and --dh with --omega");
      try {
        threshold =
            seqclust::threshold_from_omega(seqclust::make_cluster_geometry(*opt.d_l, *opt.d_h),
                                           opt.omega);
      } catch (const std::exception& e) {
        throw BadArguments(e.what());
      }
    }
  }

  const auto dist = seqclust::pairwise_distance_matrix(seqs, metric);
  seqclust::ClusteringResult result;
  if (opt.algorithm == "known")
    result = seqclust::cluster_known_k(dist, *opt.k, opt.max_iters);
  else if (opt.algorithm == "merge")
    result = seqclust::cluster_merge_based(dist, threshold, opt.max_iters);
  else
    result = seqclust::cluster_split_based(dist, threshold, opt.max_iters);

  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
  out << "# medoids=";
  for (std::size_t l = 0; l < result.medoids.size(); ++l)
    out << (l ? "," : "") << result.medoids[l];
  out << " iterations=" << result.iterations << " converged="
      << (result.converged ? "true" : "false") << '\n';
  out << "sequence_index,cluster_id\n";
  for (std::size_t i = 0; i < result.assignment.size(); ++i)
    out << i << ',' << result.assignment[i] << '\n';
  return kExitOk;
}

struct SimulateOptions {
  std::string family = "gaussian";
  double delta = 0.0;
  std::string metric = "ks";
  double kernel_scale = 2.0;
  std::string algorithm = "known";
  double omega = 0.5;
  std::vector<int> sample_sizes;
  int trials = 200;
  std::uint64_t seed = 0;
  std::string output;
  int max_iters = 100;
  unsigned threads = 1;
  std::optional<double> d_l;
  std::optional<double> d_h;
  std::size_t mc_samples = 1'000'000;
};

int run_simulate(const SimulateOptions& opt) {
  if (!(opt.omega > 0.0 && opt.omega < 1.0))
    throw BadArguments("--omega must lie strictly in (0, 1)");
  if (opt.delta < 0.0) throw BadArguments("--delta must be nonnegative");
  for (int n : opt.sample_sizes) {
    if (n < 1) throw BadArguments("--n values must be positive");
    if (opt.metric == "mmd" && n < 2) throw BadArguments("--n must be >= 2 for --metric mmd");
  }
  if (opt.d_l.has_value() != opt.d_h.has_value())
    throw BadArguments("supply both --dl and --dh or neither");

  seqclust::ScenarioConfig cfg;
  cfg.family = opt.family == "gaussian" ? seqclust::Family::gaussian : seqclust::Family::gamma;
  cfg.delta = opt.delta;
  cfg.metric = opt.metric == "ks" ? seqclust::MetricKind::ks : seqclust::MetricKind::mmd2;
  cfg.kernel_scale = opt.kernel_scale;
  if (opt.algorithm == "known")
    cfg.algorithm = seqclust::AlgorithmKind::known_k;
  else if (opt.algorithm == "merge")
    cfg.algorithm = seqclust::AlgorithmKind::merge;
  else
    cfg.algorithm = seqclust::AlgorithmKind::split;
  cfg.omega = opt.omega;
  cfg.sample_sizes = opt.sample_sizes;
  cfg.trials = opt.trials;
  cfg.master_seed = opt.seed;
  cfg.max_iters = opt.max_iters;
  cfg.threads = opt.threads;
  cfg.d_l_override = opt.d_l;
  cfg.d_h_override = opt.d_h;
  cfg.geometry_mc_samples = opt.mc_samples;

  const auto curve = seqclust::run_trials(cfg);
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
  seqclust::write_error_curve_csv(out, curve);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution-based clustering of data sequences"};
  app.require_subcommand(1);

  ClusterOptions copt;
  auto* cluster = app.add_subcommand("cluster", "Cluster sequences from a text file");
  cluster->add_option("--input", copt.input, "Input file, one comma-separated sequence per line")
      ->required();
  cluster->add_option("--metric", copt.metric, "Distance metric")
      ->check(CLI::IsMember({"ks", "mmd"}))
      ->capture_default_str();
  cluster->add_option("--kernel-scale", copt.kernel_scale,
                      "Exponential-kernel scale s in exp(-|x-y|/s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_option("--k", copt.k, "Number of clusters (algorithm known)");
  cluster->add_option("--dth", copt.d_th, "Distance threshold (algorithms merge/split)");
  cluster->add_option("--omega", copt.omega, "Threshold mix in (0,1) used with --dl/--dh")
      ->capture_default_str();
  cluster->add_option("--dl", copt.d_l, "Max intra-cluster distribution distance");
  cluster->add_option("--dh", copt.d_h, "Min inter-cluster distribution distance");
  cluster->add_option("--algorithm", copt.algorithm, "Clustering algorithm")
      ->check(CLI::IsMember({"known", "merge", "split"}))
      ->capture_default_str();
  cluster->add_option("--max-iters", copt.max_iters, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_option("--output", copt.output, "Output CSV path")->required();

  SimulateOptions sopt;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo error-probability experiment");
  simulate->add_option("--family", sopt.family, "Distribution family")
      ->check(CLI::IsMember({"gaussian", "gamma"}))
      ->capture_default_str();
  simulate->add_option("--delta", sopt.delta, "Within-cluster parameter spread")
      ->capture_default_str();
  simulate->add_option("--metric", sopt.metric, "Distance metric")
      ->check(CLI::IsMember({"ks", "mmd"}))
      ->capture_default_str();
  simulate->add_option("--kernel-scale", sopt.kernel_scale,
                       "Exponential-kernel scale s in exp(-|x-y|/s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--algorithm", sopt.algorithm, "Clustering algorithm")
      ->check(CLI::IsMember({"known", "merge", "split"}))
      ->capture_default_str();
  simulate->add_option("--omega", sopt.omega, "Threshold mix in (0,1)")->capture_default_str();
  simulate->add_option("--n", sopt.sample_sizes, "Sample sizes, comma separated")
      ->required()
      ->delimiter(',');
  simulate->add_option("--trials", sopt.trials, "Trials per sample size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", sopt.seed, "Master seed")->capture_default_str();
  simulate->add_option("--output", sopt.output, "Output CSV path")->required();
  simulate->add_option("--max-iters", sopt.max_iters, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--threads", sopt.threads, "Worker threads for trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--dl", sopt.d_l, "Override for the max intra-cluster distance");
  simulate->add_option("--dh", sopt.d_h, "Override for the min inter-cluster distance");
  simulate->add_option("--mc-samples", sopt.mc_samples,
                       "Monte-Carlo samples for the MMD geometry estimate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (cluster->parsed()) return run_cluster(copt);
    return run_simulate(sopt);
  } catch (const BadArguments& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const InputParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
}
