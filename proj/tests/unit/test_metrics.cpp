#include <cmath>
#include <random>

#include "doctest.h"
#include "seqclust/distance.hpp"
#include "seqclust/empirical_cdf.hpp"
#include "test_oracles.hpp"

using namespace seqclust;

TEST_SUITE("empirical_cdf") {
  TEST_CASE("counts samples at and below the query point") {
    EmpiricalCdf cdf(DataSequence{1.0, 2.0, 3.0});
    CHECK(cdf(2.0) == doctest::Approx(2.0 / 3.0));
    CHECK(cdf(0.5) == 0.0);
    CHECK(cdf(3.0) == 1.0);
    CHECK(cdf(100.0) == 1.0);
  }

  TEST_CASE("duplicate samples produce one jump of combined height") {
    EmpiricalCdf cdf(std::vector<double>{1.0, 1.0, 1.0, 2.0});
    CHECK(cdf(std::nextafter(1.0, 0.0)) == 0.0);
    CHECK(cdf(1.0) == doctest::Approx(0.75));
  }

  TEST_CASE("nondecreasing and right-continuous on random data") {
    std::mt19937_64 gen(11);
    EmpiricalCdf cdf(testoracle::random_values(gen, 40));
    double prev = 0.0;
    for (double a = -4.0; a <= 4.0; a += 0.01) {
      const double f = cdf(a);
      CHECK(f >= prev);
      CHECK(f == cdf(a));  // evaluation is pure
      prev = f;
    }
    CHECK(prev == 1.0);
  }

  TEST_CASE("rejects empty and multivariate input") {
    CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(EmpiricalCdf(DataSequence({1.0, 2.0, 3.0, 4.0}, 2)), std::invalid_argument);
  }
}

TEST_SUITE("ks_distance") {
  TEST_CASE("identical sequences are at distance 0") {
    DataSequence x{0.3, -1.2, 4.0, 0.3};
    CHECK(ks_distance(x, x) == 0.0);
  }

  TEST_CASE("disjoint supports are at distance 1") {
    CHECK(ks_distance(DataSequence{1.0, 2.0}, DataSequence{3.0, 4.0}) == 1.0);
  }

  TEST_CASE("interleaved fixture") {
    const DataSequence x{1.0, 3.0};
    const DataSequence y{2.0, 4.0};
    CHECK(ks_distance(x, y) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ks_distance(x, y) ==
          doctest::Approx(testoracle::ks_grid_oracle({1.0, 3.0}, {2.0, 4.0})).epsilon(1e-15));
  }

  TEST_CASE("rejects multivariate sequences") {
    DataSequence x({1.0, 2.0, 3.0, 4.0}, 2);
    DataSequence y({0.0, 0.0, 1.0, 1.0}, 2);
    CHECK_THROWS_AS(ks_distance(x, y), std::invalid_argument);
  }

  TEST_CASE("matches the dense-grid oracle on random sequences") {
    std::mt19937_64 gen(2024);
    std::uniform_int_distribution<std::size_t> len(1, 50);
    for (int rep = 0; rep < 300; ++rep) {
      const auto xs = testoracle::random_values(gen, len(gen));
      const auto ys = testoracle::random_values(gen, len(gen));
      const double got = ks_distance(DataSequence(xs), DataSequence(ys));
      CHECK(std::abs((got) - (testoracle::ks_grid_oracle(xs, ys))) <= 1e-12);
    }
  }

  TEST_CASE("ties across the two samples are handled exactly") {
    const auto xs = std::vector<double>{0.0, 1.0, 1.0, 2.0};
    const auto ys = std::vector<double>{1.0, 1.0, 3.0};
    CHECK(std::abs((ks_distance(DataSequence(xs), DataSequence(ys))) - (testoracle::ks_grid_oracle(xs, ys))) <= 1e-12);
  }

  TEST_CASE("symmetry, triangle inequality, and range on random triples") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::size_t> len(1, 30);
    for (int rep = 0; rep < 200; ++rep) {
      const DataSequence x(testoracle::random_values(gen, len(gen)));
      const DataSequence y(testoracle::random_values(gen, len(gen)));
      const DataSequence z(testoracle::random_values(gen, len(gen)));
      const double dxy = ks_distance(x, y);
      const double dyz = ks_distance(y, z);
      const double dxz = ks_distance(x, z);
      CHECK(dxy == ks_distance(y, x));
      CHECK(dxz <= dxy + dyz + 1e-12);
      CHECK(dxy >= 0.0);
      CHECK(dxy <= 1.0);
    }
  }
}

TEST_SUITE("ks_distance_to_cdf") {
  TEST_CASE("single sample at the median") {
    const auto cdf = [](double a) { return testoracle::std_normal_cdf(a); };
    CHECK(ks_distance_to_cdf(DataSequence{0.0}, cdf) == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("samples at the i/(n+1) quantiles of the uniform CDF") {
    // F(z) = z on [0, 1]; nine samples at 0.1 .. 0.9 leave a worst gap of 1/10.
    std::vector<double> samples;
    for (int i = 1; i <= 9; ++i) samples.push_back(i / 10.0);
    const auto cdf = [](double a) { return std::clamp(a, 0.0, 1.0); };
    CHECK(ks_distance_to_cdf(DataSequence(samples), cdf) ==
          doctest::Approx(0.1).epsilon(1e-12));
  }

  TEST_CASE("a sample where the CDF has reached 1") {
    // The ECDF jumps 0 -> 1 at the sample; just below it the CDF already sits
    // at (numerically) 1, so the supremum is that left-limit value.
    const auto cdf = [](double a) { return testoracle::std_normal_cdf(a); };
    CHECK(ks_distance_to_cdf(DataSequence{40.0}, cdf) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("rejects multivariate sequences") {
    DataSequence x({1.0, 2.0}, 2);
    CHECK_THROWS_AS(ks_distance_to_cdf(x, [](double) { return 0.5; }), std::invalid_argument);
  }

  TEST_CASE("duplicates keep the statistic exact") {
    const auto cdf = [](double a) { return std::clamp(a, 0.0, 1.0); };
    // Samples {0.5, 0.5}: ECDF jumps 0 -> 1 at 0.5, F = 0.5 there.
    CHECK(ks_distance_to_cdf(DataSequence{0.5, 0.5}, cdf) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("exponential kernel values") {
    const Kernel k = exponential_kernel();
    CHECK(k(1.5, 1.5) == 1.0);
    CHECK(k(0.0, 2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(k.bound() == 1.0);
  }

  TEST_CASE("reduces to the scalar form through the L1 norm") {
    const Kernel k = exponential_kernel();
    const std::vector<double> x{0.0, 1.0};
    const std::vector<double> y{2.0, -1.0};
    CHECK(k(std::span<const double>(x), std::span<const double>(y)) ==
          doctest::Approx(std::exp(-4.0 / 2.0)).epsilon(1e-15));
  }

  TEST_CASE("symmetry and range on random arguments") {
    const Kernel k = exponential_kernel();
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int rep = 0; rep < 200; ++rep) {
      const double a = u(gen), b = u(gen);
      CHECK(k(a, b) == k(b, a));
      CHECK(k(a, b) > 0.0);
      CHECK(k(a, b) <= k.bound());
    }
  }

  TEST_CASE("dimension mismatch and bad scale are rejected") {
    const Kernel k = exponential_kernel();
    const std::vector<double> x{0.0, 1.0};
    const std::vector<double> y{2.0};
    CHECK_THROWS_AS(k(std::span<const double>(x), std::span<const double>(y)),
                    std::invalid_argument);
    CHECK_THROWS_AS(exponential_kernel(0.0), std::invalid_argument);
  }
}

TEST_SUITE("mmd2_unbiased") {
  TEST_CASE("identical constant sequences give exactly 0") {
    const DataSequence x{0.7, 0.7};
    CHECK(mmd2_unbiased(x, x, exponential_kernel()) == 0.0);
  }

  TEST_CASE("separated constants") {
    const DataSequence x{0.0, 0.0};
    const DataSequence y{2.0, 2.0};
    CHECK(mmd2_unbiased(x, y, exponential_kernel()) ==
          doctest::Approx(2.0 - 2.0 * std::exp(-1.0)).epsilon(1e-15));
  }

  TEST_CASE("the unbiased estimator can be negative") {
    const DataSequence x{0.0, 1.0};
    const DataSequence y{0.0, 1.0};
    const double v = mmd2_unbiased(x, y, exponential_kernel());
    CHECK(v == doctest::Approx(std::exp(-0.5) - 1.0).epsilon(1e-15));
    CHECK(v < 0.0);
  }

  TEST_CASE("needs two samples on each side") {
    const DataSequence one{1.0};
    const DataSequence two{1.0, 2.0};
    CHECK_THROWS_AS(mmd2_unbiased(one, two, exponential_kernel()), std::invalid_argument);
    CHECK_THROWS_AS(mmd2_unbiased(two, one, exponential_kernel()), std::invalid_argument);
  }

  TEST_CASE("matches the literal triple sum on random sequences") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<std::size_t> len(2, 50);
    const Kernel k = exponential_kernel();
    for (int rep = 0; rep < 200; ++rep) {
      const auto xs = testoracle::random_values(gen, len(gen));
      const auto ys = testoracle::random_values(gen, len(gen));
      const double got = mmd2_unbiased(DataSequence(xs), DataSequence(ys), k);
      CHECK(std::abs((got) - (testoracle::mmd2_triple_sum_oracle(xs, ys))) <= 1e-12);
    }
  }

  TEST_CASE("symmetric in the two sequences") {
    std::mt19937_64 gen(5);
    const Kernel k = exponential_kernel();
    for (int rep = 0; rep < 50; ++rep) {
      const DataSequence x(testoracle::random_values(gen, 9));
      const DataSequence y(testoracle::random_values(gen, 13));
      CHECK(std::abs((mmd2_unbiased(x, y, k)) - (mmd2_unbiased(y, x, k))) <= 1e-12);
    }
  }

  TEST_CASE("invariant under within-sequence permutations") {
    std::mt19937_64 gen(6);
    const Kernel k = exponential_kernel();
    for (int rep = 0; rep < 50; ++rep) {
      auto xs = testoracle::random_values(gen, 11);
      auto ys = testoracle::random_values(gen, 8);
      const double base = mmd2_unbiased(DataSequence(xs), DataSequence(ys), k);
      std::shuffle(xs.begin(), xs.end(), gen);
      std::shuffle(ys.begin(), ys.end(), gen);
      CHECK(std::abs((mmd2_unbiased(DataSequence(xs), DataSequence(ys), k)) - (base)) <= 1e-12);
    }
  }
}

TEST_SUITE("pairwise_distance_matrix") {
  TEST_CASE("two identical sequences under KS give the zero matrix") {
    std::vector<DataSequence> seqs{DataSequence{1.0, 2.0}, DataSequence{1.0, 2.0}};
    const auto d = pairwise_distance_matrix(seqs, DistanceMetric::ks_metric());
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(d(i, j) == 0.0);
  }

  TEST_CASE("disjoint pair fixture") {
    std::vector<DataSequence> seqs{DataSequence{1.0, 2.0}, DataSequence{3.0, 4.0}};
    const auto d = pairwise_distance_matrix(seqs, DistanceMetric::ks_metric());
    CHECK(d(0, 1) == 1.0);
    CHECK(d(1, 0) == 1.0);
    CHECK(d(0, 0) == 0.0);
  }

  TEST_CASE("MMD entries equal the triple-sum oracle, diagonal stays 0") {
    std::mt19937_64 gen(41);
    std::vector<std::vector<double>> raw;
    std::vector<DataSequence> seqs;
    for (int i = 0; i < 3; ++i) {
      raw.push_back(testoracle::random_values(gen, 12));
      seqs.emplace_back(raw.back());
    }
    const auto d =
        pairwise_distance_matrix(seqs, DistanceMetric::mmd2_metric(exponential_kernel()));
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(d(i, i) == 0.0);
      for (std::size_t j = i + 1; j < 3; ++j) {
        CHECK(d(i, j) == d(j, i));
        CHECK(std::abs((d(i, j)) - (testoracle::mmd2_triple_sum_oracle(raw[i], raw[j]))) <= 1e-12);
      }
    }
  }

  TEST_CASE("bit-identical across thread counts") {
    std::mt19937_64 gen(123);
    std::vector<DataSequence> seqs;
    for (int i = 0; i < 9; ++i) seqs.emplace_back(testoracle::random_values(gen, 25));
    const auto metric = DistanceMetric::mmd2_metric(exponential_kernel());
    const auto d1 = pairwise_distance_matrix(seqs, metric, 1);
    const auto d3 = pairwise_distance_matrix(seqs, metric, 3);
    for (std::size_t i = 0; i < seqs.size(); ++i)
      for (std::size_t j = 0; j < seqs.size(); ++j) CHECK(d1(i, j) == d3(i, j));
  }

  TEST_CASE("input validation") {
    std::vector<DataSequence> one{DataSequence{1.0}};
    CHECK_THROWS_AS(pairwise_distance_matrix(one, DistanceMetric::ks_metric()),
                    std::invalid_argument);
    std::vector<DataSequence> mixed{DataSequence{1.0, 2.0}, DataSequence({1.0, 2.0}, 2)};
    CHECK_THROWS_AS(pairwise_distance_matrix(mixed, DistanceMetric::ks_metric()),
                    std::invalid_argument);
    std::vector<DataSequence> pair{DataSequence{1.0, 2.0}, DataSequence{3.0, 4.0}};
    CHECK_THROWS_AS(
        pairwise_distance_matrix(pair, DistanceMetric{MetricKind::mmd2, std::nullopt}),
        std::invalid_argument);
  }
}
