#include "seqclust/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace seqclust {

namespace {

void check_counts(int m, int t, int n) {
  if (m < 1) throw std::invalid_argument("error bound: m must be positive");
  if (t < 0) throw std::invalid_argument("error bound: t must be nonnegative");
  if (n < 1) throw std::invalid_argument("error bound: n must be positive");
}

void check_kernel_bound(double kb) {
  if (!(kb > 0.0) || !std::isfinite(kb))
    throw std::invalid_argument("error bound: kernel bound must be positive and finite");
}

double check_sample_count(int n) {
  if (n < 1) throw std::invalid_argument("tail bound: n must be positive");
  return static_cast<double>(n);
}

}  // namespace

BoundParameters ks_bound_parameters(double delta) {
  if (!(delta > 0.0)) throw std::domain_error("ks_bound_parameters: delta must be positive");
  return {4.0, 4.0, 6.0, delta * delta / 8.0};
}

BoundParameters mmd_bound_parameters(double delta, double kernel_bound) {
  if (!(delta > 0.0)) throw std::domain_error("mmd_bound_parameters: delta must be positive");
  check_kernel_bound(kernel_bound);
  return {1.0, 1.0, 1.0, delta * delta / (256.0 * kernel_bound * kernel_bound)};
}

BoundValue theorem_error_bound(AlgorithmKind algorithm, int m, int t, int n,
                               const BoundParameters& params) {
  check_counts(m, t, n);
  if (!(params.b > 0.0)) throw std::domain_error("theorem_error_bound: rate b must be positive");
  if (params.a1 < 0.0 || params.a2 < 0.0 || params.a3 < 0.0 || !std::isfinite(params.a1) ||
      !std::isfinite(params.a2) || !std::isfinite(params.a3))
    throw std::invalid_argument("theorem_error_bound: prefactors must be finite and nonnegative");

  const double td = static_cast<double>(t);
  double prefactor = 0.0;
  switch (algorithm) {
    case AlgorithmKind::known_k:
      prefactor = params.a1 + params.a2 + (td + 1.0) * params.a3;
      break;
    case AlgorithmKind::merge:
      prefactor = (td + 1.0) * params.a1 + params.a2 + (td + 1.0) * params.a3;
      break;
    case AlgorithmKind::split:
      prefactor = td * (params.a1 + params.a2 + params.a3);
      break;
  }
  const double md = static_cast<double>(m);
  const double value = md * md * prefactor * std::exp(-params.b * static_cast<double>(n));
  return {value, value > 1.0};
}

BoundValue error_bound(AlgorithmKind algorithm, MetricKind metric, int m, int t, int n,
                       double delta, double kernel_bound) {
  const BoundParameters params = metric == MetricKind::ks
                                     ? ks_bound_parameters(delta)
                                     : mmd_bound_parameters(delta, kernel_bound);
  return theorem_error_bound(algorithm, m, t, n, params);
}

double dkw_bound(int n, double eps) {
  const double nd = check_sample_count(n);
  if (!(eps >= 0.0)) throw std::domain_error("dkw_bound: eps must be nonnegative");
  return 2.0 * std::exp(-2.0 * nd * eps * eps);
}

double ks_intra_tail_bound(int n, double d0, double d_l) {
  const double nd = check_sample_count(n);
  if (!(d_l >= 0.0) || !(d0 >= d_l))
    throw std::domain_error("ks_intra_tail_bound: requires 0 <= d_l <= d0");
  const double gap = d0 - d_l;
  return 4.0 * std::exp(-nd * gap * gap / 2.0);
}

double mmd_intra_tail_bound(int n, double d0, double d_l, double kernel_bound) {
  const double nd = check_sample_count(n);
  check_kernel_bound(kernel_bound);
  if (!(d0 >= d_l)) throw std::domain_error("mmd_intra_tail_bound: requires d0 >= d_l");
  const double gap = d0 - d_l;
  return std::exp(-nd * gap * gap / (64.0 * kernel_bound * kernel_bound));
}

double ks_inter_tail_bound(int n, double d0, double d_h) {
  const double nd = check_sample_count(n);
  if (!(d0 >= 0.0) || !(d0 <= d_h))
    throw std::domain_error("ks_inter_tail_bound: requires 0 <= d0 <= d_h");
  const double gap = d_h - d0;
  return 4.0 * std::exp(-nd * gap * gap / 2.0);
}

double mmd_inter_tail_bound(int n, double d0, double d_h, double kernel_bound) {
  const double nd = check_sample_count(n);
  check_kernel_bound(kernel_bound);
  if (!(d0 <= d_h)) throw std::domain_error("mmd_inter_tail_bound: requires d0 <= d_h");
  const double gap = d_h - d0;
  return std::exp(-nd * gap * gap / (64.0 * kernel_bound * kernel_bound));
}

double ks_misorder_tail_bound(int n, double delta) {
  const double nd = check_sample_count(n);
  if (!(delta >= 0.0)) throw std::domain_error("ks_misorder_tail_bound: delta must be nonnegative");
  return 6.0 * std::exp(-nd * delta * delta / 8.0);
}

double mmd_misorder_tail_bound(int n, double delta, double kernel_bound) {
  const double nd = check_sample_count(n);
  check_kernel_bound(kernel_bound);
  if (!(delta >= 0.0))
    throw std::domain_error("mmd_misorder_tail_bound: delta must be nonnegative");
  return std::exp(-nd * delta * delta / (96.0 * kernel_bound * kernel_bound));
}

}  // namespace seqclust
