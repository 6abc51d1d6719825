#include "seqclust/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace seqclust {

Scenario build_scenario(Family family, double delta) {
  if (!std::isfinite(delta) || delta < 0.0)
    throw std::invalid_argument("build_scenario: delta must be finite and nonnegative");

  Scenario scenario;
  scenario.specs.reserve(kScenarioSequences);
  scenario.labels.reserve(kScenarioSequences);
  for (int k = 1; k <= kScenarioClusters; ++k) {
    const double center = family == Family::gaussian ? static_cast<double>(k)
                                                     : 2.5 * static_cast<double>(k) + 1.0;
    for (const double offset : {-delta, 0.0, delta}) {
      if (family == Family::gaussian)
        scenario.specs.push_back(GaussianSpec{center + offset, 1.0});
      else
        scenario.specs.push_back(GammaSpec{center + offset, 1.0});
      scenario.labels.push_back(k - 1);
    }
  }
  return scenario;
}

bool partition_matches_truth(const ClusteringResult& result, std::span<const int> labels) {
  if (result.assignment.size() != labels.size())
    throw std::invalid_argument("partition_matches_truth: length mismatch");

  // Canonical relabeling by first appearance; two partitions are equal as
  // unordered sets of sets iff their canonical forms coincide.
  auto canonical = [](std::span<const int> ids) {
    std::vector<int> out(ids.size());
    std::vector<int> remap;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int id = ids[i];
      int mapped = -1;
      for (std::size_t r = 0; r < remap.size(); ++r)
        if (remap[r] == id) {
          mapped = static_cast<int>(r);
          break;
        }
      if (mapped < 0) {
        mapped = static_cast<int>(remap.size());
        remap.push_back(id);
      }
      out[i] = mapped;
    }
    return out;
  };
  return canonical(result.assignment) == canonical(labels);
}

std::string family_name(Family family) {
  return family == Family::gaussian ? "gaussian" : "gamma";
}

}  // namespace seqclust
