// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef L1LAB_NUMERICS_HPP
#define L1LAB_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace l1lab {

/// Deterministic pairwise-tree summation. The reduction order depends only
/// on the element order, never on threading or chunking, so results are
/// bit-reproducible across runs.
double pairwise_sum(std::span<const double> v);

/// Least-squares line fit y = slope*x + intercept with coefficient of
/// determination. Inputs must have equal size >= 2.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Fit of log(y) against log(t) restricted to t in [t_lo, t_hi].
LineFit fit_loglog(std::span<const double> t, std::span<const double> y,
                   double t_lo, double t_hi);

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> node;
  std::vector<double> weight;
  explicit GaussLegendre(int n);
  double integrate(double a, double b,
                   const std::function<double(double)>& f) const;
};

/// Adaptive Simpson on [a, b] with absolute tolerance. Recursion depth is
/// bounded; the estimate of the remaining error is accumulated into the
/// returned err field.
struct AdaptiveResult {
  double value = 0.0;
  double err = 0.0;
  std::size_t evals = 0;
};
AdaptiveResult adaptive_simpson(const std::function<double(double)>& f,
                                double a, double b, double abs_tol,
                                int max_depth = 42);

/// Brent root refinement on a bracketing interval [a, b] with f(a)*f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double tol);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

/// Surface measure of the unit sphere in R^d, i.e. d * unit_ball_volume(d).
double unit_sphere_area(int d);

}  // namespace l1lab

#endif
