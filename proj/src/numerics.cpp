// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0

#include "l1lab/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace l1lab {

namespace {

double pairwise_sum_impl(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> v) {
  return pairwise_sum_impl(v.data(), v.size());
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need two or more paired samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LineFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return out;
}

LineFit fit_loglog(std::span<const double> t, std::span<const double> y,
                   double t_lo, double t_hi) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (y[i] <= 0.0) throw std::invalid_argument("fit_loglog: nonpositive value");
    lx.push_back(std::log(t[i]));
    ly.push_back(std::log(y[i]));
  }
  return fit_line(lx, ly);
}

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: n >= 2");
  node.resize(n);
  weight.resize(n);
  // Newton iteration from the Chebyshev initial guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      const double dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = n * (x * p0 - p1) / (x * x - 1.0);
    node[i] = -x;
    node[n - 1 - i] = x;
    weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double GaussLegendre::integrate(double a, double b,
                                const std::function<double(double)>& f) const {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < node.size(); ++i)
    s += weight[i] * f(mid + half * node[i]);
  return s * half;
}

namespace {

void simpson_rec(const std::function<double(double)>& f, double a, double b,
                 double fa, double fm, double fb, double whole, double tol,
                 int depth, AdaptiveResult& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  acc.evals += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    acc.value += left + right + delta / 15.0;
    acc.err += std::abs(delta) / 15.0;
    return;
  }
  simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, acc);
  simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, acc);
}

}  // namespace

AdaptiveResult adaptive_simpson(const std::function<double(double)>& f,
                                double a, double b, double abs_tol,
                                int max_depth) {
  AdaptiveResult acc;
  if (a == b) return acc;
  const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  acc.evals = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, acc);
  return acc;
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  double fa = f(a), fb = f(b);
  if (fa * fb > 0) throw std::invalid_argument("brent_root: no sign change");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a;
  bool mflag = true;
  for (int it = 0; it < 200; ++it) {
    if (fb == 0.0 || std::abs(b - a) < tol) return b;
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double lo = (3.0 * a + b) / 4.0;
    const bool bad = !((s > std::min(lo, b) && s < std::max(lo, b))) ||
                     (mflag && std::abs(s - b) >= std::abs(b - c) / 2.0) ||
                     (!mflag && std::abs(s - b) >= std::abs(c - d) / 2.0);
    if (bad) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    const double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

}  // namespace l1lab
