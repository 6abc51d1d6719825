#include <benchmark/benchmark.h>

#include <random>

#include "seqclust/kmedoids.hpp"
#include "seqclust/unknown_k.hpp"

using namespace seqclust;

namespace {

PairwiseDistanceMatrix random_matrix(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PairwiseDistanceMatrix d(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) d.set(i, j, u(gen));
  return d;
}

void BM_ClusterKnownK(benchmark::State& state) {
  const auto d = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  const int k = static_cast<int>(state.range(0) / 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_known_k(d, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClusterKnownK)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_ClusterMergeBased(benchmark::State& state) {
  const auto d = random_matrix(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_merge_based(d, {0.25}));
  }
}
BENCHMARK(BM_ClusterMergeBased)->Arg(64)->Arg(256);

void BM_ClusterSplitBased(benchmark::State& state) {
  const auto d = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_split_based(d, {0.25}));
  }
}
BENCHMARK(BM_ClusterSplitBased)->Arg(64)->Arg(256);

}  // namespace
