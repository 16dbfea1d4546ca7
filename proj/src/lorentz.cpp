// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0

#include "l1lab/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "l1lab/numerics.hpp"

namespace l1lab {

LorentzParams::LorentzParams(double p_, double q_) : p(p_), q(q_) {
  if (!(p > 1.0) || std::isinf(p))
    throw std::invalid_argument("LorentzParams: p must lie in (1, inf)");
  if (!(q > 0.0)) throw std::invalid_argument("LorentzParams: q must be positive or inf");
}

void DistributionProfile::validate() const {
  if (level.size() != measure.size())
    throw std::invalid_argument("DistributionProfile: level/measure size mismatch");
  for (std::size_t j = 0; j < level.size(); ++j) {
    if (!(level[j] > 0)) throw std::invalid_argument("DistributionProfile: levels must be positive");
    if (j > 0 && !(level[j] > level[j - 1]))
      throw std::invalid_argument("DistributionProfile: levels must increase strictly");
    if (j > 0 && measure[j] > measure[j - 1])
      throw std::invalid_argument("DistributionProfile: measures must be nonincreasing");
    if (measure[j] < 0) throw std::invalid_argument("DistributionProfile: negative measure");
  }
}

DistributionProfile distribution_profile(const SampledField& f) {
  f.check_finite();
  const SampledField mag = magnitude(f);
  std::vector<double> vals;
  vals.reserve(mag.data.size());
  for (double v : mag.data)
    if (v > 0.0) vals.push_back(v);
  std::sort(vals.begin(), vals.end());

  DistributionProfile out;
  const double cv = f.grid.cell_volume();
  // Walk ascending; lambda for breakpoint v is the trailing count of cells
  // with magnitude >= v.
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    out.level.push_back(vals[i]);
    out.measure.push_back(static_cast<double>(vals.size() - i) * cv);
    i = j;
  }
  return out;
}

double lorentz_norm(const DistributionProfile& profile, const LorentzParams& params) {
  profile.validate();
  if (profile.empty()) return 0.0;
  const double p = params.p, q = params.q;
  if (std::isinf(q)) {
    double sup = 0.0;
    for (std::size_t j = 0; j < profile.steps(); ++j)
      sup = std::max(sup, profile.level[j] * std::pow(profile.measure[j], 1.0 / p));
    return sup;
  }
  std::vector<double> terms(profile.steps());
  double prev_tq = 0.0;
  for (std::size_t j = 0; j < profile.steps(); ++j) {
    const double tq = std::pow(profile.level[j], q);
    terms[j] = std::pow(profile.measure[j], q / p) * (tq - prev_tq);
    prev_tq = tq;
  }
  return std::pow(p / q * pairwise_sum(terms), 1.0 / q);
}

double lorentz_norm(const SampledField& f, const LorentzParams& params) {
  return lorentz_norm(distribution_profile(f), params);
}

double radial_step_lorentz_exact_log(std::span<const double> log_heights,
                                     std::span<const double> log_radii, int d,
                                     const LorentzParams& params) {
  if (log_heights.size() != log_radii.size())
    throw std::invalid_argument("radial_step: heights/radii size mismatch");
  const std::size_t N = log_heights.size();
  if (N == 0) return 0.0;
  for (std::size_t i = 1; i < N; ++i)
    if (!(log_radii[i] < log_radii[i - 1]))
      throw std::invalid_argument("radial_step: radii must decrease strictly");

  const double p = params.p, q = params.q;
  const double log_vd = std::log(unit_ball_volume(d));

  // log H_i via a running log-sum-exp; H_i - H_{i-1} = h_i exactly in the
  // sense that the recurrence below tracks log(H_{i-1}/H_i) to full precision.
  std::vector<double> logH(N);
  double acc = log_heights[0];
  logH[0] = acc;
  for (std::size_t i = 1; i < N; ++i) {
    const double hi = log_heights[i];
    const double m = std::max(acc, hi);
    acc = m + std::log(std::exp(acc - m) + std::exp(hi - m));
    logH[i] = acc;
  }

  if (std::isinf(q)) {
    // sup over the step where {u > t} = B(0, r_i), t in [H_{i-1}, H_i).
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < N; ++i) {
      const double log_lambda = log_vd + d * log_radii[i];
      sup = std::max(sup, logH[i] + log_lambda / p);
    }
    return std::exp(sup);
  }

  std::vector<double> terms(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double log_lambda = log_vd + d * log_radii[i];
    // t_i^q - t_{i-1}^q = exp(q logH_i) * (1 - exp(q (logH_{i-1} - logH_i)))
    double bracket = 1.0;
    if (i > 0) bracket = -std::expm1(q * (logH[i - 1] - logH[i]));
    terms[i] = std::exp((q / p) * log_lambda + q * logH[i]) * bracket;
  }
  return std::pow(p / q * pairwise_sum(terms), 1.0 / q);
}

double radial_step_lorentz_exact(std::span<const double> heights,
                                 std::span<const double> radii, int d,
                                 const LorentzParams& params) {
  std::vector<double> lh(heights.size()), lr(radii.size());
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (!(heights[i] > 0)) throw std::invalid_argument("radial_step: heights must be positive");
    if (!(radii[i] > 0)) throw std::invalid_argument("radial_step: radii must be positive");
    lh[i] = std::log(heights[i]);
    lr[i] = std::log(radii[i]);
  }
  return radial_step_lorentz_exact_log(lh, lr, d, params);
}

std::string profile_to_csv(const DistributionProfile& profile) {
  std::ostringstream os;
  os.precision(17);
  os << "t,lambda\n";
  for (std::size_t j = 0; j < profile.steps(); ++j)
    os << profile.level[j] << "," << profile.measure[j] << "\n";
  return os.str();
}

}  // namespace l1lab
