#include "seqclust/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqclust {

std::uint64_t Rng::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::uniform_int: bound must be positive");
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    const auto wide = static_cast<unsigned __int128>(r) * bound;
    if (static_cast<std::uint64_t>(wide) >= threshold)
      return static_cast<std::uint64_t>(wide >> 64);
  }
}

double Rng::normal(double mean, double stddev) {
  // Box-Muller, cosine branch only: exactly two engine draws per variate.
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::invalid_argument("Rng::gamma: shape must be positive and finite");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a + 1) * U^(1/a).
    const double g = gamma(shape + 1.0);
    const double u = 1.0 - uniform01();
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

DataSequence sample_sequence(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_sequence(spec, n, rng);
}

DataSequence sample_sequence(const DistributionSpec& spec, std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("sample_sequence: n must be positive");
  std::vector<double> values(n);
  if (const auto* g = std::get_if<GaussianSpec>(&spec)) {
    if (!std::isfinite(g->mean) || !(g->variance > 0.0))
      throw std::invalid_argument("sample_sequence: invalid Gaussian parameters");
    const double sd = std::sqrt(g->variance);
    for (auto& v : values) v = rng.normal(g->mean, sd);
  } else {
    const auto& m = std::get<GammaSpec>(spec);
    if (!(m.shape > 0.0) || !(m.scale > 0.0))
      throw std::invalid_argument("sample_sequence: invalid Gamma parameters");
    for (auto& v : values) v = m.scale * rng.gamma(m.shape);
  }
  return DataSequence(std::move(values));
}

}  // namespace seqclust
