#pragma once

#include <cstdint>
#include <random>

#include "seqclust/data_sequence.hpp"
#include "seqclust/distributions.hpp"

namespace seqclust {

/// SplitMix64 finalizer; the building block of all seed derivation here.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Per-trial seed: mix(mix(mix(master) ^ n) ^ trial). Order-independent
/// parallel trials reproduce exactly because every trial's stream depends
/// only on (master_seed, n, trial).
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t n, std::uint64_t trial) {
  return mix64(mix64(mix64(master_seed) ^ n) ^ trial);
}

/// Deterministic random source: a std::mt19937_64 engine (bit-exact per the
/// C++ standard) with hand-rolled variate transforms, so streams are
/// reproducible across platforms and library versions.
///   uniform: 53-bit mantissa in [0, 1)
///   normal:  Box-Muller, two engine draws per variate
///   gamma:   Marsaglia-Tsang squeeze/rejection (ACM TOMS 26(3), 2000)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); Lemire rejection, unbiased.
  std::uint64_t uniform_int(std::uint64_t bound);

  double normal(double mean = 0.0, double stddev = 1.0);

  /// Gamma(shape) with unit scale.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
};

/// n i.i.d. draws from the spec; deterministic given (spec, n, seed).
DataSequence sample_sequence(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

/// Draws n samples using an existing stream.
DataSequence sample_sequence(const DistributionSpec& spec, std::size_t n, Rng& rng);

}  // namespace seqclust
