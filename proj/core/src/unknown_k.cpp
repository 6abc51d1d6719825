#include "seqclust/unknown_k.hpp"

#include <limits>
#include <stdexcept>

namespace seqclust {

namespace {

// Farthest sequence from its nearest center, with the max taken over all
// sequences; ties go to the lowest index.
std::pair<int, double> farthest_from_centers(const std::vector<double>& min_dist,
                                             const std::vector<char>& is_center) {
  int best = -1;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < min_dist.size(); ++i) {
    if (is_center[i]) continue;
    if (min_dist[i] > best_val) {
      best_val = min_dist[i];
      best = static_cast<int>(i);
    }
  }
  return {best, best_val};
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> merge_init(const PairwiseDistanceMatrix& dist,
                                                         const ThresholdConfig& threshold) {
  const std::size_t m = dist.size();
  if (m == 0) throw std::invalid_argument("merge_init: empty distance matrix");

  std::vector<int> centers{0};
  std::vector<char> is_center(m, 0);
  is_center[0] = 1;
  std::vector<double> min_dist(m);
  for (std::size_t i = 0; i < m; ++i) min_dist[i] = dist(i, 0);

  while (centers.size() < m) {
    const auto [idx, val] = farthest_from_centers(min_dist, is_center);
    if (!(val > threshold.d_th)) break;
    centers.push_back(idx);
    is_center[static_cast<std::size_t>(idx)] = 1;
    for (std::size_t i = 0; i < m; ++i) min_dist[i] = std::min(min_dist[i], dist(i, idx));
  }

  auto assignment = assign_to_centers(dist, centers);
  return {std::move(centers), std::move(assignment)};
}

std::pair<std::vector<int>, std::vector<int>> merge_centers(const PairwiseDistanceMatrix& dist,
                                                            std::vector<int> centers,
                                                            std::vector<int> assignment,
                                                            const ThresholdConfig& threshold) {
  for (;;) {
    // First ordered pair within the threshold; rescan from scratch after
    // every merge because positions shift when a center is deleted.
    int k1 = -1, k2 = -1;
    for (std::size_t a = 0; a + 1 < centers.size() && k1 < 0; ++a)
      for (std::size_t b = a + 1; b < centers.size(); ++b)
        if (dist(centers[a], centers[b]) <= threshold.d_th) {
          k1 = static_cast<int>(a);
          k2 = static_cast<int>(b);
          break;
        }
    if (k1 < 0) break;

    double sum_into_k2 = 0.0;  // members of k1 measured against c_k2
    double sum_into_k1 = 0.0;  // members of k2 measured against c_k1
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] == k1) sum_into_k2 += dist(centers[static_cast<std::size_t>(k2)], i);
      if (assignment[i] == k2) sum_into_k1 += dist(centers[static_cast<std::size_t>(k1)], i);
    }
    const int survivor = sum_into_k2 < sum_into_k1 ? k2 : k1;
    const int removed = sum_into_k2 < sum_into_k1 ? k1 : k2;

    for (auto& a : assignment) {
      if (a == removed) a = survivor;
      if (a > removed) --a;
    }
    centers.erase(centers.begin() + removed);
  }
  return {std::move(centers), std::move(assignment)};
}

ClusteringResult cluster_merge_based(const PairwiseDistanceMatrix& dist,
                                     const ThresholdConfig& threshold, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  ClusteringResult result;

  auto [medoids, assignment] = merge_init(dist, threshold);
  result.forced_singleton = repair_empty_clusters(medoids, assignment);
  result.objective_trace.push_back(clustering_objective(dist, assignment, medoids));

  for (int iter = 1; iter <= max_iters; ++iter) {
    auto updated = update_medoids(dist, assignment, static_cast<int>(medoids.size()));
    result.objective_trace.push_back(clustering_objective(dist, assignment, updated));

    auto [merged_centers, merged_assignment] =
        merge_centers(dist, std::move(updated), assignment, threshold);
    result.objective_trace.push_back(
        clustering_objective(dist, merged_assignment, merged_centers));

    auto new_assignment = reassign_strict(dist, merged_centers, merged_assignment);
    result.objective_trace.push_back(clustering_objective(dist, new_assignment, merged_centers));

    const bool unchanged = merged_centers == medoids && new_assignment == assignment;
    medoids = std::move(merged_centers);
    assignment = std::move(new_assignment);
    result.iterations = iter;
    if (unchanged) {
      result.converged = true;
      break;
    }
  }

  result.k_hat = static_cast<int>(medoids.size());
  result.medoids = std::move(medoids);
  result.assignment = std::move(assignment);
  return result;
}

ClusteringResult cluster_split_based(const PairwiseDistanceMatrix& dist,
                                     const ThresholdConfig& threshold, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  if (dist.size() == 0) throw std::invalid_argument("cluster_split_based: empty distance matrix");
  ClusteringResult result;

  std::vector<int> assignment(dist.size(), 0);
  std::vector<int> medoids = update_medoids(dist, assignment, 1);
  result.objective_trace.push_back(clustering_objective(dist, assignment, medoids));

  for (int iter = 1; iter <= max_iters; ++iter) {
    // Split step: the donor cluster is identified over the existing clusters
    // before the cluster count grows.
    int farthest = -1;
    double farthest_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const double d = dist(i, medoids[static_cast<std::size_t>(assignment[i])]);
      if (d > farthest_val) {
        farthest_val = d;
        farthest = static_cast<int>(i);
      }
    }
    const bool split_fired = farthest_val > threshold.d_th;
    if (split_fired) medoids.push_back(farthest);

    auto new_assignment = reassign_strict(dist, medoids, assignment);
    result.objective_trace.push_back(clustering_objective(dist, new_assignment, medoids));

    const bool unchanged = !split_fired && new_assignment == assignment;
    assignment = std::move(new_assignment);
    result.iterations = iter;
    if (unchanged) {
      result.converged = true;
      break;
    }
  }

  result.k_hat = static_cast<int>(medoids.size());
  result.medoids = std::move(medoids);
  result.assignment = std::move(assignment);
  return result;
}

}  // namespace seqclust
