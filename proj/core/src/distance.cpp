#include "seqclust/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace seqclust {

double ks_distance(const DataSequence& x, const DataSequence& y) {
  require_scalar(x, "ks_distance");
  require_scalar(y, "ks_distance");
  return ks_distance(EmpiricalCdf(x), EmpiricalCdf(y));
}

double ks_distance(const EmpiricalCdf& x, const EmpiricalCdf& y) {
  const auto xs = x.sorted_samples();
  const auto ys = y.sorted_samples();
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());

  // The difference of two right-continuous step functions is piecewise
  // constant with breakpoints only at sample values, so scanning the pooled
  // sorted values gives the exact supremum. Equal values from both sides are
  // consumed together before the gap is evaluated.
  std::size_t i = 0, j = 0;
  double sup = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  // Once one side is exhausted its ECDF sits at 1 from its maximum onward and
  // the gap only shrinks at later breakpoints; the loop already saw the peak.
  return sup;
}

double ks_distance_to_cdf(const DataSequence& x, const std::function<double(double)>& cdf) {
  require_scalar(x, "ks_distance_to_cdf");
  std::vector<double> z(x.values().begin(), x.values().end());
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = cdf(z[i]);
    const double hi = static_cast<double>(i + 1) / n;
    const double lo = static_cast<double>(i) / n;
    sup = std::max({sup, std::abs(hi - f), std::abs(lo - f)});
  }
  return sup;
}

double mmd2_unbiased(const DataSequence& x, const DataSequence& y, const Kernel& kernel) {
  const std::size_t n = x.size();
  const std::size_t ny = y.size();
  if (n < 2 || ny < 2)
    throw std::invalid_argument("mmd2_unbiased: both sequences need at least 2 samples");
  if (x.dim() != y.dim())
    throw std::invalid_argument("mmd2_unbiased: sequences have different dimensions");

  double within_x = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) within_x += kernel(x.sample(i), x.sample(j));

  double within_y = 0.0;
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (j != i) within_y += kernel(y.sample(i), y.sample(j));

  double cross = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < ny; ++j) cross += kernel(x.sample(i), y.sample(j));

  return within_x / (static_cast<double>(n) * static_cast<double>(n - 1)) +
         within_y / (static_cast<double>(ny) * static_cast<double>(ny - 1)) -
         2.0 * cross / (static_cast<double>(n) * static_cast<double>(ny));
}

double sequence_distance(const DataSequence& x, const DataSequence& y, const DistanceMetric& m) {
  switch (m.kind) {
    case MetricKind::ks:
      return ks_distance(x, y);
    case MetricKind::mmd2:
      if (!m.kernel) throw std::invalid_argument("sequence_distance: MMD^2 metric needs a kernel");
      return mmd2_unbiased(x, y, *m.kernel);
  }
  throw std::invalid_argument("sequence_distance: unknown metric kind");
}

PairwiseDistanceMatrix pairwise_distance_matrix(std::span<const DataSequence> seqs,
                                                const DistanceMetric& metric, unsigned threads) {
  const std::size_t m = seqs.size();
  if (m < 2) throw std::invalid_argument("pairwise_distance_matrix: need at least 2 sequences");
  for (const auto& s : seqs)
    if (s.dim() != seqs[0].dim())
      throw std::invalid_argument("pairwise_distance_matrix: heterogeneous sample dimensions");

  // KS reuses one sorted copy per sequence across all pairs.
  std::vector<EmpiricalCdf> cdfs;
  if (metric.kind == MetricKind::ks) {
    cdfs.reserve(m);
    for (const auto& s : seqs) {
      require_scalar(s, "pairwise_distance_matrix");
      cdfs.emplace_back(s);
    }
  } else if (!metric.kernel) {
    throw std::invalid_argument("pairwise_distance_matrix: MMD^2 metric needs a kernel");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  PairwiseDistanceMatrix dist(m);
  auto compute = [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const double v = metric.kind == MetricKind::ks ? ks_distance(cdfs[i], cdfs[j])
                                                   : mmd2_unbiased(seqs[i], seqs[j], *metric.kernel);
    dist.set(i, j, v);
  };

  if (threads <= 1 || pairs.size() < 2) {
    for (std::size_t p = 0; p < pairs.size(); ++p) compute(p);
  } else {
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(pairs.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t p = w; p < pairs.size(); p += workers) compute(p);
      });
    }
    for (auto& t : pool) t.join();
  }
  return dist;
}

}  // namespace seqclust
