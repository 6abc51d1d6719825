#include <random>

#include "doctest.h"
#include "seqclust/kmedoids.hpp"
#include "test_fixtures.hpp"

using namespace seqclust;

TEST_SUITE("init_centers_known_k") {
  TEST_CASE("the first center is sequence 0") {
    std::mt19937_64 gen(1);
    const auto d = testfix::random_symmetric_matrix(gen, 6);
    CHECK(init_centers_known_k(d, 1) == std::vector<int>{0});
  }

  TEST_CASE("hand-traced farthest-first recursion") {
    const auto d = testfix::four_seq_matrix();
    CHECK(init_centers_known_k(d, 2) == std::vector<int>{0, 3});
    CHECK(init_centers_known_k(d, 3) == std::vector<int>{0, 3, 2});
  }

  TEST_CASE("all-equal distances fall back to index order") {
    PairwiseDistanceMatrix d(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) d.set(i, j, 0.7);
    CHECK(init_centers_known_k(d, 4) == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("k out of range is rejected") {
    const auto d = testfix::four_seq_matrix();
    CHECK_THROWS_AS(init_centers_known_k(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(init_centers_known_k(d, 5), std::invalid_argument);
  }
}

TEST_SUITE("assign_to_centers") {
  TEST_CASE("single center collects everything") {
    const auto d = testfix::four_seq_matrix();
    CHECK(assign_to_centers(d, {2}) == std::vector<int>(4, 0));
  }

  TEST_CASE("hand-traced assignment for centers {0, 3}") {
    const auto d = testfix::four_seq_matrix();
    CHECK(assign_to_centers(d, {0, 3}) == std::vector<int>{0, 0, 0, 1});
  }

  TEST_CASE("centers claim themselves; zero-distance ties go to the lower position") {
    PairwiseDistanceMatrix d(3);
    d.set(0, 1, 0.0);
    d.set(0, 2, 0.5);
    d.set(1, 2, 0.5);
    const auto a = assign_to_centers(d, {0, 1});
    CHECK(a[0] == 0);
    CHECK(a[1] == 0);  // duplicate of center 0, lower position wins
  }

  TEST_CASE("invalid centers are rejected") {
    const auto d = testfix::four_seq_matrix();
    CHECK_THROWS_AS(assign_to_centers(d, {}), std::invalid_argument);
    CHECK_THROWS_AS(assign_to_centers(d, {0, 7}), std::invalid_argument);
    CHECK_THROWS_AS(assign_to_centers(d, {0, 0}), std::invalid_argument);
  }
}

TEST_SUITE("reassign_strict") {
  TEST_CASE("a sequence moves only when strictly closer") {
    PairwiseDistanceMatrix d(3);
    d.set(0, 2, 0.4);
    d.set(1, 2, 0.4);  // tie between both centers for sequence 2
    d.set(0, 1, 1.0);
    CHECK(reassign_strict(d, {0, 1}, {0, 1, 1}) == std::vector<int>{0, 1, 1});
    CHECK(reassign_strict(d, {0, 1}, {0, 1, 0}) == std::vector<int>{0, 1, 0});
  }

  TEST_CASE("strict improvements are taken") {
    PairwiseDistanceMatrix d(3);
    d.set(0, 2, 0.6);
    d.set(1, 2, 0.4);
    d.set(0, 1, 1.0);
    CHECK(reassign_strict(d, {0, 1}, {0, 1, 0}) == std::vector<int>{0, 1, 1});
  }
}

TEST_SUITE("update_medoids") {
  TEST_CASE("singleton cluster keeps its only member") {
    const auto d = testfix::four_seq_matrix();
    CHECK(update_medoids(d, {0, 0, 0, 1}, 2)[1] == 3);
  }

  TEST_CASE("hand-summed medoid of points 0, 1, 5") {
    const auto d = testfix::line_matrix({0.0, 1.0, 5.0});
    CHECK(update_medoids(d, {0, 0, 0}, 1) == std::vector<int>{1});
  }

  TEST_CASE("equal sums break toward the lower index") {
    const auto d = testfix::line_matrix({0.0, 2.0});  // both sums are 2
    CHECK(update_medoids(d, {0, 0}, 1) == std::vector<int>{0});
  }

  TEST_CASE("empty cluster is an error") {
    const auto d = testfix::four_seq_matrix();
    CHECK_THROWS_AS(update_medoids(d, {0, 0, 0, 0}, 2), std::invalid_argument);
  }
}

TEST_SUITE("cluster_known_k") {
  TEST_CASE("k equal to the sequence count separates everything in one pass") {
    std::mt19937_64 gen(17);
    const auto d = testfix::random_symmetric_matrix(gen, 6, 0.2, 1.0);
    const auto r = cluster_known_k(d, 6);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.k_hat == 6);
    // Every sequence is its own singleton cluster (ids follow center order).
    for (int i = 0; i < 6; ++i)
      CHECK(r.medoids[static_cast<std::size_t>(r.assignment[static_cast<std::size_t>(i)])] == i);
  }

  TEST_CASE("well-separated groups are recovered and minimize the objective") {
    std::mt19937_64 gen(29);
    std::uniform_real_distribution<double> intra(0.1, 0.3);
    std::uniform_real_distribution<double> inter(0.8, 1.0);
    const std::vector<int> truth{0, 0, 0, 1, 1, 1};
    PairwiseDistanceMatrix d(6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j)
        d.set(i, j, truth[i] == truth[j] ? intra(gen) : inter(gen));

    const auto r = cluster_known_k(d, 2);
    CHECK(r.converged);
    CHECK(testfix::same_partition(r.assignment, truth));

    // Brute force over every 2-partition: the returned partition attains the
    // minimal objective.
    double best = 1e18;
    std::vector<int> best_assignment;
    // Pin sequence 5 to cluster 1 and enumerate the other five memberships;
    // mask 31 would leave cluster 0 empty.
    for (int mask = 0; mask < 31; ++mask) {
      std::vector<int> a(6, 1);
      for (int i = 0; i < 5; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1;
      const auto medoids = update_medoids(d, a, 2);
      const double obj = clustering_objective(d, a, medoids);
      if (obj < best) {
        best = obj;
        best_assignment = a;
      }
    }
    CHECK(testfix::same_partition(best_assignment, truth));
    CHECK(clustering_objective(d, r.assignment, r.medoids) == doctest::Approx(best));
  }

  TEST_CASE("medoid membership and contiguous ids hold at return") {
    std::mt19937_64 gen(31);
    for (int rep = 0; rep < 30; ++rep) {
      const auto d = testfix::random_symmetric_matrix(gen, 10);
      const auto r = cluster_known_k(d, 1 + static_cast<int>(gen() % 10));
      std::vector<int> count(static_cast<std::size_t>(r.k_hat), 0);
      for (int a : r.assignment) {
        REQUIRE(a >= 0);
        REQUIRE(a < r.k_hat);
        ++count[static_cast<std::size_t>(a)];
      }
      for (int c : count) CHECK(c > 0);
      for (std::size_t l = 0; l < r.medoids.size(); ++l)
        CHECK(r.assignment[static_cast<std::size_t>(r.medoids[l])] == static_cast<int>(l));
    }
  }

  TEST_CASE("objective trace never increases across half-steps") {
    std::mt19937_64 gen(37);
    for (int rep = 0; rep < 30; ++rep) {
      const auto d = testfix::random_symmetric_matrix(gen, 12);
      const auto r = cluster_known_k(d, 3);
      for (std::size_t s = 1; s < r.objective_trace.size(); ++s)
        CHECK(r.objective_trace[s] <= r.objective_trace[s - 1] + 1e-12);
    }
  }

  TEST_CASE("convergence is a fixed point of the half-step operators") {
    std::mt19937_64 gen(43);
    for (int rep = 0; rep < 20; ++rep) {
      const auto d = testfix::random_symmetric_matrix(gen, 9);
      const auto r = cluster_known_k(d, 4);
      REQUIRE(r.converged);
      CHECK(update_medoids(d, r.assignment, r.k_hat) == r.medoids);
      CHECK(reassign_strict(d, r.medoids, r.assignment) == r.assignment);
    }
  }

  TEST_CASE("identical inputs give identical outputs") {
    std::mt19937_64 gen(53);
    const auto d = testfix::random_symmetric_matrix(gen, 11);
    const auto a = cluster_known_k(d, 4);
    const auto b = cluster_known_k(d, 4);
    CHECK(a.assignment == b.assignment);
    CHECK(a.medoids == b.medoids);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective_trace == b.objective_trace);
  }

  TEST_CASE("duplicate sequences with k above the distinct count are retained as singletons") {
    // Three identical sequences (all distances 0) and two clusters requested.
    PairwiseDistanceMatrix d(3);
    const auto r = cluster_known_k(d, 2);
    CHECK(r.forced_singleton);
    CHECK(r.k_hat == 2);
    std::vector<int> count(2, 0);
    for (int a : r.assignment) ++count[static_cast<std::size_t>(a)];
    CHECK(count[0] > 0);
    CHECK(count[1] > 0);
  }
}
