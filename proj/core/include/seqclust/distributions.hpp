#pragma once

#include <string>
#include <variant>

namespace seqclust {

/// Gaussian N(mean, variance), scalar.
struct GaussianSpec {
  double mean = 0.0;
  double variance = 1.0;
};

/// Gamma with density x^(shape-1) e^(-x/scale) / (scale^shape Gamma(shape)) on x > 0.
struct GammaSpec {
  double shape = 1.0;
  double scale = 1.0;
};

/// Analytic distribution descriptor exposing exact CDF and quantile evaluation.
using DistributionSpec = std::variant<GaussianSpec, GammaSpec>;

bool same_spec(const DistributionSpec& a, const DistributionSpec& b);
std::string spec_name(const DistributionSpec& spec);

double dist_cdf(const DistributionSpec& spec, double x);
/// Inverse CDF for p in (0, 1), solved by bisection on the monotone CDF.
double dist_quantile(const DistributionSpec& spec, double p);
double dist_mean(const DistributionSpec& spec);

/// Standard normal CDF.
double normal_cdf(double z);

/// Regularized lower incomplete gamma P(a, x); series/continued-fraction split.
double gamma_p(double a, double x);

}  // namespace seqclust
