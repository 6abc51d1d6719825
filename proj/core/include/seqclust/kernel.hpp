#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace seqclust {

/// A bounded symmetric kernel g(x, y) on m-vectors with 0 <= g <= bound.
/// The bound is carried explicitly because the error-bound formulas need it.
class Kernel {
 public:
  using Eval = std::function<double(std::span<const double>, std::span<const double>)>;

  Kernel(Eval eval, double bound, std::string name)
      : eval_(std::move(eval)), bound_(bound), name_(std::move(name)) {
    if (!(bound_ > 0.0) || !std::isfinite(bound_))
      throw std::invalid_argument("Kernel: bound must be positive and finite");
  }

  double operator()(std::span<const double> x, std::span<const double> y) const {
    if (x.size() != y.size())
      throw std::invalid_argument("Kernel: dimension mismatch between arguments");
    return eval_(x, y);
  }

  double operator()(double x, double y) const {
    return (*this)(std::span<const double>(&x, 1), std::span<const double>(&y, 1));
  }

  double bound() const { return bound_; }
  const std::string& name() const { return name_; }

 private:
  Eval eval_;
  double bound_;
  std::string name_;
};

/// exp(-||x - y||_1 / scale). At scale = 2 and m = 1 this is exp(-|x - y| / 2).
/// Bound is 1 for every scale.
inline Kernel exponential_kernel(double scale = 2.0) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("exponential_kernel: scale must be positive and finite");
  auto eval = [scale](std::span<const double> x, std::span<const double> y) {
    double l1 = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) l1 += std::abs(x[d] - y[d]);
    return std::exp(-l1 / scale);
  };
  return Kernel(std::move(eval), 1.0, "exponential(scale=" + std::to_string(scale) + ")");
}

}  // namespace seqclust
