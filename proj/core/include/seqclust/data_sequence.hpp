#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqclust {

/// One observed data sequence: n samples, each a real vector of dimension m.
/// Storage is row-major (sample-major). All entries must be finite.
class DataSequence {
 public:
  /// Scalar sequence (m = 1).
  explicit DataSequence(std::vector<double> values)
      : values_(std::move(values)), n_(values_.size()), m_(1) {
    validate();
  }

  DataSequence(std::initializer_list<double> values)
      : DataSequence(std::vector<double>(values)) {}

  /// General sequence: flat row-major buffer of n samples of dimension m.
  DataSequence(std::vector<double> flat, std::size_t dim)
      : values_(std::move(flat)), m_(dim) {
    if (m_ == 0) throw std::invalid_argument("DataSequence: dimension must be positive");
    if (values_.empty() || values_.size() % m_ != 0)
      throw std::invalid_argument("DataSequence: sample buffer not a multiple of dimension");
    n_ = values_.size() / m_;
    validate();
  }

  std::size_t size() const { return n_; }
  std::size_t dim() const { return m_; }

  std::span<const double> sample(std::size_t i) const {
    return {values_.data() + i * m_, m_};
  }

  /// i-th sample of a scalar sequence.
  double scalar(std::size_t i) const { return values_[i]; }

  std::span<const double> values() const { return values_; }

 private:
  void validate() const {
    if (n_ == 0) throw std::invalid_argument("DataSequence: at least one sample required");
    for (double v : values_)
      if (!std::isfinite(v)) throw std::invalid_argument("DataSequence: non-finite sample value");
  }

  std::vector<double> values_;
  std::size_t n_ = 0;
  std::size_t m_ = 1;
};

/// Throws unless the sequence is scalar; scalar-only operations call this.
inline void require_scalar(const DataSequence& x, const char* what) {
  if (x.dim() != 1)
    throw std::invalid_argument(std::string(what) + ": requires dimension 1, got dimension " +
                                std::to_string(x.dim()));
}

}  // namespace seqclust
