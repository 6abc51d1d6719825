#pragma once

#include <span>
#include <vector>

#include "seqclust/data_sequence.hpp"

namespace seqclust {

/// Right-continuous empirical CDF of a scalar sample set.
/// Jumps only at sample values, each of height multiplicity/n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(const DataSequence& x);
  explicit EmpiricalCdf(std::vector<double> samples);

  /// F(a) = (# samples <= a) / n.
  double operator()(double a) const;

  std::size_t size() const { return sorted_.size(); }
  std::span<const double> sorted_samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

}  // namespace seqclust
