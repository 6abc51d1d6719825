#include "seqclust/empirical_cdf.hpp"

#include <algorithm>

namespace seqclust {

EmpiricalCdf::EmpiricalCdf(const DataSequence& x) {
  require_scalar(x, "EmpiricalCdf");
  sorted_.assign(x.values().begin(), x.values().end());
  std::sort(sorted_.begin(), sorted_.end());
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample set");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double a) const {
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), a);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

}  // namespace seqclust
