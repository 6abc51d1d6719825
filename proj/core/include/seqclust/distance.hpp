#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "seqclust/data_sequence.hpp"
#include "seqclust/empirical_cdf.hpp"
#include "seqclust/kernel.hpp"

namespace seqclust {

/// Two-sample Kolmogorov-Smirnov distance: sup_a |F_x(a) - F_y(a)|.
/// Exact merge-scan over the pooled sorted samples; both inputs must be scalar.
double ks_distance(const DataSequence& x, const DataSequence& y);

/// Same statistic on already-sorted sample sets.
double ks_distance(const EmpiricalCdf& x, const EmpiricalCdf& y);

/// KS distance between a scalar sequence and a continuous CDF:
/// max_i max(|i/n - F(z_i)|, |(i-1)/n - F(z_i)|) over the sorted samples z_i.
double ks_distance_to_cdf(const DataSequence& x, const std::function<double(double)>& cdf);

/// Unbiased U-statistic estimator of the squared maximum mean discrepancy
/// between the generating distributions of x and y. The value can be negative.
/// Requires at least two samples in each sequence.
double mmd2_unbiased(const DataSequence& x, const DataSequence& y, const Kernel& kernel);

enum class MetricKind { ks, mmd2 };

/// A pluggable sequence distance: KS or squared-MMD with a bounded kernel.
struct DistanceMetric {
  MetricKind kind = MetricKind::ks;
  std::optional<Kernel> kernel;  // required iff kind == mmd2

  static DistanceMetric ks_metric() { return {MetricKind::ks, std::nullopt}; }
  static DistanceMetric mmd2_metric(Kernel k) { return {MetricKind::mmd2, std::move(k)}; }

  double kernel_bound() const { return kernel ? kernel->bound() : 1.0; }
};

double sequence_distance(const DataSequence& x, const DataSequence& y, const DistanceMetric& m);

/// Symmetric matrix of pairwise sequence distances with a zero diagonal.
/// The zero diagonal is a convention shared by all metrics so medoid argmins
/// stay well defined (the MMD^2 self-statistic is not identically zero).
class PairwiseDistanceMatrix {
 public:
  explicit PairwiseDistanceMatrix(std::size_t size) : size_(size), data_(size * size, 0.0) {}

  double operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

  /// Sets both (i, j) and (j, i); the diagonal stays zero.
  void set(std::size_t i, std::size_t j, double value) {
    if (i == j) return;
    data_[i * size_ + j] = value;
    data_[j * size_ + i] = value;
  }

  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::vector<double> data_;
};

/// Each unordered pair is computed exactly once, so the result is symmetric by
/// construction and bit-identical for any thread count.
PairwiseDistanceMatrix pairwise_distance_matrix(std::span<const DataSequence> seqs,
                                                const DistanceMetric& metric,
                                                unsigned threads = 1);

}  // namespace seqclust
