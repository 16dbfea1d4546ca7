// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0
//
// Lorentz-space functionals L^{p,q} evaluated exactly from the step-function
// distribution of sampled magnitudes:
//   ||u||^q = (p/q) * sum_j lambda_j^{q/p} (t_j^q - t_{j-1}^q),   q < inf,
//   ||u||   = sup_j t_j lambda_j^{1/p},                            q = inf,
// where lambda_j = |{|u| > t}| for t in [t_{j-1}, t_j). No quadrature error
// enters: the distribution of a sampled field is exactly a step function.

#ifndef L1LAB_LORENTZ_HPP
#define L1LAB_LORENTZ_HPP

#include <span>
#include <string>
#include <vector>

#include "l1lab/grid.hpp"

namespace l1lab {

struct LorentzParams {
  double p;  // (1, inf)
  double q;  // (0, inf]; pass infinity for the weak space
  LorentzParams(double p_, double q_);
};

/// Exact distribution function of a nonnegative step measure: breakpoints
/// 0 < t_1 < ... < t_J and measures lambda_1 >= ... >= lambda_J, where
/// lambda_j is the measure of {|u| > t} on [t_{j-1}, t_j), t_0 = 0.
struct DistributionProfile {
  std::vector<double> level;    // t_j, strictly increasing
  std::vector<double> measure;  // lambda_j, nonincreasing

  std::size_t steps() const { return level.size(); }
  bool empty() const { return level.empty(); }
  void validate() const;
};

/// Distribution of the pointwise Euclidean magnitude of a sampled field.
/// Breakpoints are the sorted distinct positive magnitudes; measures are
/// trailing cell-volume counts.
DistributionProfile distribution_profile(const SampledField& f);

/// Exact Lorentz norm of a step distribution.
double lorentz_norm(const DistributionProfile& profile, const LorentzParams& params);

/// Convenience: distribution_profile + lorentz_norm.
double lorentz_norm(const SampledField& f, const LorentzParams& params);

/// Exact Lorentz norm of u = sum_i h_i * chi_{B(0, r_i)} with strictly
/// decreasing radii, evaluated analytically from partial sums H_i and ball
/// volumes. Heights and radii are passed in log form so that deep
/// constructions (r_i below the double underflow threshold) stay exact.
double radial_step_lorentz_exact_log(std::span<const double> log_heights,
                                     std::span<const double> log_radii, int d,
                                     const LorentzParams& params);

/// Plain-double front end for resolvable heights/radii.
double radial_step_lorentz_exact(std::span<const double> heights,
                                 std::span<const double> radii, int d,
                                 const LorentzParams& params);

/// Profile rows as CSV "t,lambda" for external plotting.
std::string profile_to_csv(const DistributionProfile& profile);

}  // namespace l1lab

#endif
