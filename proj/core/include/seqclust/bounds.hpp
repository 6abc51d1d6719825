#pragma once

#include "seqclust/distance.hpp"

namespace seqclust {

enum class AlgorithmKind { known_k, merge, split };

/// Constants of the generic exponential error bound: the three event
/// prefactors a1 (inter-cluster distance too small), a2 (intra-cluster
/// distance too large), a3 (intra exceeds inter for a sequence triple),
/// and the per-sample exponent rate b.
struct BoundParameters {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double b = 0.0;
};

/// KS instantiation at d_th = Sigma / 2: prefactors (4, 4, 6), rate delta^2 / 8.
BoundParameters ks_bound_parameters(double delta);

/// MMD^2 instantiation at d_th = Sigma / 2: prefactors (1, 1, 1),
/// rate delta^2 / (256 K^2) with K the kernel bound.
BoundParameters mmd_bound_parameters(double delta, double kernel_bound);

/// A theoretical error-probability bound. Values above 1 carry no
/// information; they are returned raw with the vacuous flag set so that
/// log-bound plots keep the exponential shape.
struct BoundValue {
  double value = 0.0;
  bool vacuous = false;
};

/// Generic error bound after t iterations on m sequences:
///   known_k: m^2 (a1 + a2 + (t+1) a3) e^(-bn)
///   merge:   m^2 ((t+1) a1 + a2 + (t+1) a3) e^(-bn)
///   split:   m^2 t (a1 + a2 + a3) e^(-bn)
BoundValue theorem_error_bound(AlgorithmKind algorithm, int m, int t, int n,
                               const BoundParameters& params);

/// The six closed-form bounds for KS / MMD^2 under each algorithm.
BoundValue error_bound(AlgorithmKind algorithm, MetricKind metric, int m, int t, int n,
                       double delta, double kernel_bound = 1.0);

/// Dvoretzky-Kiefer-Wolfowitz: P(d_KS(x, p) > eps) <= 2 e^(-2 n eps^2).
double dkw_bound(int n, double eps);

/// P(KS distance of two same-cluster sequences > d0) <= 4 e^(-n (d0 - d_l)^2 / 2).
double ks_intra_tail_bound(int n, double d0, double d_l);

/// MMD^2 analogue: e^(-n (d0 - d_l)^2 / (64 K^2)).
double mmd_intra_tail_bound(int n, double d0, double d_l, double kernel_bound);

/// P(KS distance of two cross-cluster sequences <= d0) <= 4 e^(-n (d_h - d0)^2 / 2).
double ks_inter_tail_bound(int n, double d0, double d_h);

/// MMD^2 analogue: e^(-n (d_h - d0)^2 / (64 K^2)).
double mmd_inter_tail_bound(int n, double d0, double d_h, double kernel_bound);

/// P(same-cluster KS distance >= cross-cluster KS distance for a sequence
/// triple) <= 6 e^(-n delta^2 / 8).
double ks_misorder_tail_bound(int n, double delta);

/// MMD^2 analogue: e^(-n delta^2 / (96 K^2)).
double mmd_misorder_tail_bound(int n, double delta, double kernel_bound);

}  // namespace seqclust
