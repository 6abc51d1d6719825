#include "seqclust/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqclust/random.hpp"

namespace seqclust {

namespace {

// Total order on specs so the Monte-Carlo stream consumes (p, q) in a fixed
// role order; together with the bracketing below this makes the estimate
// symmetric in its arguments.
bool spec_less(const DistributionSpec& a, const DistributionSpec& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ga = std::get_if<GaussianSpec>(&a)) {
    const auto& gb = std::get<GaussianSpec>(b);
    return ga->mean != gb.mean ? ga->mean < gb.mean : ga->variance < gb.variance;
  }
  const auto& ma = std::get<GammaSpec>(a);
  const auto& mb = std::get<GammaSpec>(b);
  return ma.shape != mb.shape ? ma.shape < mb.shape : ma.scale < mb.scale;
}

double abs_cdf_gap(const DistributionSpec& p, const DistributionSpec& q, double a) {
  return std::abs(dist_cdf(p, a) - dist_cdf(q, a));
}

// Iteratively re-grids around the running maximum of |F_p - F_q| inside
// [lo, hi] until the bracket width is negligible.
double refine_gap_maximum(const DistributionSpec& p, const DistributionSpec& q, double lo,
                          double hi) {
  constexpr int kPoints = 65;
  double best = 0.0;
  const double width_floor = 1e-13 * (1.0 + std::abs(lo) + std::abs(hi));
  while (hi - lo > width_floor) {
    const double step = (hi - lo) / (kPoints - 1);
    int best_idx = 0;
    double best_val = -1.0;
    for (int i = 0; i < kPoints; ++i) {
      const double v = abs_cdf_gap(p, q, lo + step * i);
      if (v > best_val) {
        best_val = v;
        best_idx = i;
      }
    }
    best = std::max(best, best_val);
    const double new_lo = lo + step * std::max(0, best_idx - 1);
    const double new_hi = lo + step * std::min(kPoints - 1, best_idx + 1);
    lo = new_lo;
    hi = new_hi;
  }
  return best;
}

double ks_distance_between(const DistributionSpec& p, const DistributionSpec& q) {
  constexpr double kTailMass = 1e-6;
  const double lo = std::min(dist_quantile(p, kTailMass), dist_quantile(q, kTailMass));
  const double hi = std::max(dist_quantile(p, 1.0 - kTailMass), dist_quantile(q, 1.0 - kTailMass));

  constexpr int kGrid = 2001;
  const double step = (hi - lo) / (kGrid - 1);
  std::vector<double> gap(kGrid);
  double coarse_best = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    gap[i] = abs_cdf_gap(p, q, lo + step * i);
    coarse_best = std::max(coarse_best, gap[i]);
  }

  // Refine every near-best local maximum; the gap between two smooth CDFs can
  // peak more than once (each CDF crossing flips the sign of the difference).
  double best = coarse_best;
  for (int i = 0; i < kGrid; ++i) {
    const bool local_max = (i == 0 || gap[i] >= gap[i - 1]) &&
                           (i == kGrid - 1 || gap[i] >= gap[i + 1]);
    if (!local_max || gap[i] < coarse_best - 0.05) continue;
    const double a = lo + step * std::max(0, i - 1);
    const double b = lo + step * std::min(kGrid - 1, i + 1);
    best = std::max(best, refine_gap_maximum(p, q, a, b));
  }
  return best;
}

DistributionDistance mmd2_between(const DistributionSpec& p, const DistributionSpec& q,
                                  const Kernel& kernel, const MmdEstimateOptions& mc) {
  if (mc.samples < 2)
    throw std::invalid_argument("dist_between_distributions: need at least 2 MC samples");
  Rng rng(mc.seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < mc.samples; ++i) {
    double draws[4];  // x, x' from p; y, y' from q
    for (int d = 0; d < 2; ++d) {
      if (const auto* g = std::get_if<GaussianSpec>(&p))
        draws[d] = rng.normal(g->mean, std::sqrt(g->variance));
      else {
        const auto& gm = std::get<GammaSpec>(p);
        draws[d] = gm.scale * rng.gamma(gm.shape);
      }
    }
    for (int d = 2; d < 4; ++d) {
      if (const auto* g = std::get_if<GaussianSpec>(&q))
        draws[d] = rng.normal(g->mean, std::sqrt(g->variance));
      else {
        const auto& gm = std::get<GammaSpec>(q);
        draws[d] = gm.scale * rng.gamma(gm.shape);
      }
    }
    const double h = kernel(draws[0], draws[1]) + kernel(draws[2], draws[3]) -
                     kernel(draws[0], draws[2]) - kernel(draws[1], draws[3]);
    const double delta = h - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (h - mean);
  }
  const double n = static_cast<double>(mc.samples);
  const double variance = m2 / (n - 1.0);
  return {mean, std::sqrt(variance / n)};
}

}  // namespace

ClusterGeometry make_cluster_geometry(double d_l, double d_h) {
  if (!std::isfinite(d_l) || !std::isfinite(d_h))
    throw std::invalid_argument("cluster geometry values must be finite");
  ClusterGeometry g;
  g.d_l = d_l;
  g.d_h = d_h;
  g.sigma = d_h + d_l;
  g.delta = d_h - d_l;
  g.separated = d_l < d_h;
  return g;
}

DistributionDistance dist_between_distributions(const DistributionSpec& p,
                                                const DistributionSpec& q,
                                                const DistanceMetric& metric,
                                                const MmdEstimateOptions& mc) {
  if (same_spec(p, q)) return {0.0, 0.0};
  const DistributionSpec& first = spec_less(p, q) ? p : q;
  const DistributionSpec& second = spec_less(p, q) ? q : p;
  switch (metric.kind) {
    case MetricKind::ks:
      return {ks_distance_between(first, second), 0.0};
    case MetricKind::mmd2:
      if (!metric.kernel)
        throw std::invalid_argument("dist_between_distributions: MMD^2 metric needs a kernel");
      return mmd2_between(first, second, *metric.kernel, mc);
  }
  throw std::invalid_argument("dist_between_distributions: unknown metric kind");
}

ClusterGeometry cluster_geometry(std::span<const DistributionSpec> specs,
                                 std::span<const int> labels, const DistanceMetric& metric,
                                 const MmdEstimateOptions& mc) {
  if (specs.size() != labels.size())
    throw std::invalid_argument("cluster_geometry: specs and labels differ in length");
  if (specs.empty()) throw std::invalid_argument("cluster_geometry: no distributions");

  int num_clusters = 0;
  for (int l : labels) {
    if (l < 0) throw std::invalid_argument("cluster_geometry: negative cluster label");
    num_clusters = std::max(num_clusters, l + 1);
  }
  std::vector<int> counts(static_cast<std::size_t>(num_clusters), 0);
  for (int l : labels) ++counts[static_cast<std::size_t>(l)];
  for (int c = 0; c < num_clusters; ++c)
    if (counts[static_cast<std::size_t>(c)] == 0)
      throw std::invalid_argument("cluster_geometry: empty cluster label " + std::to_string(c));
  if (num_clusters < 2)
    throw std::invalid_argument("cluster_geometry: need at least 2 clusters for d_H");

  // Distinct spec pairs are measured once; repeated parameter pairs (the
  // delta = 0 scenarios) reuse the cached value.
  struct CacheEntry {
    const DistributionSpec* a;
    const DistributionSpec* b;
    double value;
  };
  std::vector<CacheEntry> cache;
  auto pair_distance = [&](const DistributionSpec& a, const DistributionSpec& b) {
    for (const auto& e : cache)
      if ((same_spec(*e.a, a) && same_spec(*e.b, b)) || (same_spec(*e.a, b) && same_spec(*e.b, a)))
        return e.value;
    const double v = dist_between_distributions(a, b, metric, mc).value;
    cache.push_back({&a, &b, v});
    return v;
  };

  double d_l = 0.0;
  double d_h = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      const double d = pair_distance(specs[i], specs[j]);
      if (labels[i] == labels[j])
        d_l = std::max(d_l, d);
      else
        d_h = std::min(d_h, d);
    }
  }
  return make_cluster_geometry(d_l, d_h);
}

ThresholdConfig threshold_from_omega(const ClusterGeometry& geom, double omega) {
  if (!(omega > 0.0 && omega < 1.0))
    throw std::invalid_argument("threshold_from_omega: omega must lie strictly in (0, 1)");
  if (!(geom.delta > 0.0))
    throw std::domain_error("threshold_from_omega: geometry must satisfy d_L < d_H");
  return {omega * geom.d_l + (1.0 - omega) * geom.d_h, omega};
}

}  // namespace seqclust
