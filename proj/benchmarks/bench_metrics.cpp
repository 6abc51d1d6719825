#include <benchmark/benchmark.h>

#include "seqclust/distance.hpp"
#include "seqclust/random.hpp"

using namespace seqclust;

namespace {

DataSequence gaussian_sequence(std::size_t n, std::uint64_t seed) {
  return sample_sequence(GaussianSpec{0.0, 1.0}, n, seed);
}

void BM_KsDistance(benchmark::State& state) {
  const auto x = gaussian_sequence(static_cast<std::size_t>(state.range(0)), 1);
  const auto y = gaussian_sequence(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_distance(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KsDistance)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_KsDistancePresorted(benchmark::State& state) {
  const EmpiricalCdf x(gaussian_sequence(static_cast<std::size_t>(state.range(0)), 1));
  const EmpiricalCdf y(gaussian_sequence(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_distance(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KsDistancePresorted)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Mmd2Unbiased(benchmark::State& state) {
  const auto x = gaussian_sequence(static_cast<std::size_t>(state.range(0)), 3);
  const auto y = gaussian_sequence(static_cast<std::size_t>(state.range(0)), 4);
  const Kernel kernel = exponential_kernel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmd2_unbiased(x, y, kernel));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mmd2Unbiased)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PairwiseMatrixKs(benchmark::State& state) {
  std::vector<DataSequence> seqs;
  for (int i = 0; i < 15; ++i)
    seqs.push_back(gaussian_sequence(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::uint64_t>(i)));
  const auto metric = DistanceMetric::ks_metric();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairwise_distance_matrix(seqs, metric));
  }
}
BENCHMARK(BM_PairwiseMatrixKs)->Arg(256)->Arg(1024);

void BM_GammaSampling(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.gamma(6.0));
  }
}
BENCHMARK(BM_GammaSampling);

}  // namespace

BENCHMARK_MAIN();
