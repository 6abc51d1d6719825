#include "seqclust/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace seqclust {

namespace {

constexpr int kMaxIter = 400;
constexpr double kTiny = 1e-300;

void check_gaussian(const GaussianSpec& g) {
  if (!std::isfinite(g.mean) || !std::isfinite(g.variance) || g.variance <= 0.0)
    throw std::invalid_argument("GaussianSpec: mean must be finite, variance positive");
}

void check_gamma(const GammaSpec& g) {
  if (!std::isfinite(g.shape) || !std::isfinite(g.scale) || g.shape <= 0.0 || g.scale <= 0.0)
    throw std::invalid_argument("GammaSpec: shape and scale must be positive and finite");
}

// Series expansion of P(a, x), converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x) = 1 - P(a, x), for x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double gamma_p(double a, double x) {
  if (a <= 0.0) throw std::invalid_argument("gamma_p: a must be positive");
  if (x <= 0.0) return 0.0;
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

bool same_spec(const DistributionSpec& a, const DistributionSpec& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ga = std::get_if<GaussianSpec>(&a)) {
    const auto& gb = std::get<GaussianSpec>(b);
    return ga->mean == gb.mean && ga->variance == gb.variance;
  }
  const auto& ma = std::get<GammaSpec>(a);
  const auto& mb = std::get<GammaSpec>(b);
  return ma.shape == mb.shape && ma.scale == mb.scale;
}

std::string spec_name(const DistributionSpec& spec) {
  if (const auto* g = std::get_if<GaussianSpec>(&spec))
    return "gaussian(mean=" + std::to_string(g->mean) +
           ", variance=" + std::to_string(g->variance) + ")";
  const auto& m = std::get<GammaSpec>(spec);
  return "gamma(shape=" + std::to_string(m.shape) + ", scale=" + std::to_string(m.scale) + ")";
}

double dist_cdf(const DistributionSpec& spec, double x) {
  if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
    check_gaussian(*g);
    return normal_cdf((x - g->mean) / std::sqrt(g->variance));
  }
  const auto& m = std::get<GammaSpec>(spec);
  check_gamma(m);
  return gamma_p(m.shape, x / m.scale);
}

double dist_quantile(const DistributionSpec& spec, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("dist_quantile: p must lie in (0, 1)");

  double lo, hi;
  if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
    check_gaussian(*g);
    const double sd = std::sqrt(g->variance);
    lo = g->mean - 40.0 * sd;
    hi = g->mean + 40.0 * sd;
  } else {
    const auto& m = std::get<GammaSpec>(spec);
    check_gamma(m);
    lo = 0.0;
    hi = m.scale * (m.shape + 1.0);
    while (dist_cdf(spec, hi) < p) hi *= 2.0;
  }

  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (dist_cdf(spec, mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double dist_mean(const DistributionSpec& spec) {
  if (const auto* g = std::get_if<GaussianSpec>(&spec)) return g->mean;
  const auto& m = std::get<GammaSpec>(spec);
  return m.shape * m.scale;
}

}  // namespace seqclust
