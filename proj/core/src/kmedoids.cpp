#include "seqclust/kmedoids.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace seqclust {

namespace {

void check_centers(const PairwiseDistanceMatrix& dist, const std::vector<int>& centers) {
  if (centers.empty()) throw std::invalid_argument("centers must be nonempty");
  std::vector<char> seen(dist.size(), 0);
  for (int c : centers) {
    if (c < 0 || static_cast<std::size_t>(c) >= dist.size())
      throw std::invalid_argument("center index " + std::to_string(c) + " out of range");
    if (seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("duplicate center index");
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

}  // namespace

std::vector<int> init_centers_known_k(const PairwiseDistanceMatrix& dist, int k) {
  const int m = static_cast<int>(dist.size());
  if (k < 1 || k > m) throw std::invalid_argument("k must lie in [1, number of sequences]");

  std::vector<int> centers{0};
  std::vector<char> is_center(m, 0);
  is_center[0] = 1;
  // Minimum distance from each sequence to the chosen centers so far.
  std::vector<double> min_dist(m);
  for (int i = 0; i < m; ++i) min_dist[i] = dist(i, 0);

  while (static_cast<int>(centers.size()) < k) {
    int best = -1;
    double best_val = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (is_center[i]) continue;
      if (min_dist[i] > best_val) {
        best_val = min_dist[i];
        best = i;
      }
    }
    centers.push_back(best);
    is_center[best] = 1;
    for (int i = 0; i < m; ++i) min_dist[i] = std::min(min_dist[i], dist(i, best));
  }
  return centers;
}

std::vector<int> assign_to_centers(const PairwiseDistanceMatrix& dist,
                                   const std::vector<int>& centers) {
  check_centers(dist, centers);
  std::vector<int> assignment(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    int best = 0;
    double best_val = dist(i, centers[0]);
    for (std::size_t l = 1; l < centers.size(); ++l) {
      const double d = dist(i, centers[l]);
      if (d < best_val) {
        best_val = d;
        best = static_cast<int>(l);
      }
    }
    assignment[i] = best;
  }
  return assignment;
}

std::vector<int> reassign_strict(const PairwiseDistanceMatrix& dist,
                                 const std::vector<int>& centers,
                                 const std::vector<int>& current) {
  check_centers(dist, centers);
  if (current.size() != dist.size())
    throw std::invalid_argument("current assignment size does not match matrix");

  std::vector<int> own_cluster(dist.size(), -1);
  for (std::size_t l = 0; l < centers.size(); ++l)
    own_cluster[static_cast<std::size_t>(centers[l])] = static_cast<int>(l);

  std::vector<int> assignment(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (own_cluster[i] >= 0) {
      assignment[i] = own_cluster[i];
      continue;
    }
    const int cur = current[i];
    if (cur < 0 || static_cast<std::size_t>(cur) >= centers.size())
      throw std::invalid_argument("current assignment refers to a missing cluster");
    int best = 0;
    double best_val = dist(i, centers[0]);
    for (std::size_t l = 1; l < centers.size(); ++l) {
      const double d = dist(i, centers[l]);
      if (d < best_val) {
        best_val = d;
        best = static_cast<int>(l);
      }
    }
    assignment[i] = best_val < dist(i, centers[cur]) ? best : cur;
  }
  return assignment;
}

std::vector<int> update_medoids(const PairwiseDistanceMatrix& dist,
                                const std::vector<int>& assignment, int num_clusters) {
  if (assignment.size() != dist.size())
    throw std::invalid_argument("assignment size does not match matrix");
  std::vector<std::vector<int>> members(static_cast<std::size_t>(num_clusters));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const int c = assignment[i];
    if (c < 0 || c >= num_clusters) throw std::invalid_argument("assignment id out of range");
    members[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
  }

  std::vector<int> medoids(static_cast<std::size_t>(num_clusters));
  for (int c = 0; c < num_clusters; ++c) {
    const auto& cluster = members[static_cast<std::size_t>(c)];
    if (cluster.empty())
      throw std::invalid_argument("update_medoids: cluster " + std::to_string(c) + " is empty");
    int best = cluster.front();
    double best_sum = std::numeric_limits<double>::infinity();
    for (int i : cluster) {
      double sum = 0.0;
      for (int j : cluster) sum += dist(i, j);
      if (sum < best_sum) {
        best_sum = sum;
        best = i;
      }
    }
    medoids[static_cast<std::size_t>(c)] = best;
  }
  return medoids;
}

double clustering_objective(const PairwiseDistanceMatrix& dist, const std::vector<int>& assignment,
                            const std::vector<int>& medoids) {
  double total = 0.0;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    total += dist(i, medoids[static_cast<std::size_t>(assignment[i])]);
  return total;
}

bool repair_empty_clusters(const std::vector<int>& centers, std::vector<int>& assignment) {
  bool changed = false;
  // A repair can empty another cluster, so iterate to a fixed point; each
  // center is forced at most once.
  for (bool again = true; again;) {
    again = false;
    std::vector<int> count(centers.size(), 0);
    for (int a : assignment) ++count[static_cast<std::size_t>(a)];
    for (std::size_t l = 0; l < centers.size(); ++l) {
      if (count[l] == 0) {
        assignment[static_cast<std::size_t>(centers[l])] = static_cast<int>(l);
        changed = again = true;
      }
    }
  }
  return changed;
}

ClusteringResult cluster_known_k(const PairwiseDistanceMatrix& dist, int k, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  ClusteringResult result;
  result.k_hat = k;

  std::vector<int> medoids = init_centers_known_k(dist, k);
  result.assignment = assign_to_centers(dist, medoids);
  result.forced_singleton = repair_empty_clusters(medoids, result.assignment);
  result.objective_trace.push_back(clustering_objective(dist, result.assignment, medoids));

  for (int iter = 1; iter <= max_iters; ++iter) {
    auto new_medoids = update_medoids(dist, result.assignment, k);
    result.objective_trace.push_back(clustering_objective(dist, result.assignment, new_medoids));

    auto new_assignment = reassign_strict(dist, new_medoids, result.assignment);
    result.objective_trace.push_back(clustering_objective(dist, new_assignment, new_medoids));

    const bool unchanged = new_medoids == medoids && new_assignment == result.assignment;
    medoids = std::move(new_medoids);
    result.assignment = std::move(new_assignment);
    result.iterations = iter;
    if (unchanged) {
      result.converged = true;
      break;
    }
  }
  result.medoids = std::move(medoids);
  return result;
}

}  // namespace seqclust
