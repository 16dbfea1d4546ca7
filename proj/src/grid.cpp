// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0

#include "l1lab/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "l1lab/numerics.hpp"

namespace l1lab {

GridSpec::GridSpec(int d, double L, int n) : dim(d), box(L), samples(n) {
  if (d < 1 || d > 3) throw std::invalid_argument("GridSpec: dimension must be 1, 2 or 3");
  if (!(L > 0.0)) throw std::invalid_argument("GridSpec: box side must be positive");
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("GridSpec: samples per axis must be a power of two");
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= cell();
  return v;
}

std::size_t GridSpec::total() const {
  std::size_t t = 1;
  for (int a = 0; a < dim; ++a) t *= static_cast<std::size_t>(samples);
  return t;
}

std::array<int, 3> GridSpec::unflatten(std::size_t idx) const {
  std::array<int, 3> j{0, 0, 0};
  for (int a = dim - 1; a >= 0; --a) {
    j[a] = static_cast<int>(idx % samples);
    idx /= samples;
  }
  return j;
}

Vec3 GridSpec::point(std::size_t idx) const {
  const auto j = unflatten(idx);
  Vec3 x{0, 0, 0};
  for (int a = 0; a < dim; ++a) x[a] = j[a] * cell();
  return x;
}

Vec3 GridSpec::frequency(std::size_t idx) const {
  const auto j = unflatten(idx);
  Vec3 xi{0, 0, 0};
  for (int a = 0; a < dim; ++a) xi[a] = freq_index(j[a]) / box;
  return xi;
}

double GridSpec::frequency_norm2(std::size_t idx) const {
  const auto xi = frequency(idx);
  double s = 0;
  for (int a = 0; a < dim; ++a) s += xi[a] * xi[a];
  return s;
}

SampledField::SampledField(GridSpec g, int m)
    : grid(g), comps(m), data(static_cast<std::size_t>(m) * g.total(), 0.0) {
  if (m < 1) throw std::invalid_argument("SampledField: component count must be >= 1");
}

SampledField::SampledField(GridSpec g, int m, std::vector<double> values)
    : grid(g), comps(m), data(std::move(values)) {
  if (m < 1) throw std::invalid_argument("SampledField: component count must be >= 1");
  if (data.size() != static_cast<std::size_t>(m) * grid.total())
    throw std::invalid_argument("SampledField: value array has wrong length");
}

std::span<double> SampledField::component(int c) {
  return {data.data() + static_cast<std::size_t>(c) * grid.total(), grid.total()};
}

std::span<const double> SampledField::component(int c) const {
  return {data.data() + static_cast<std::size_t>(c) * grid.total(), grid.total()};
}

void SampledField::check_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) throw std::runtime_error("SampledField: non-finite entry");
}

SampledField sample_scalar(const GridSpec& g, const std::function<double(const Vec3&)>& f) {
  SampledField out(g, 1);
  for (std::size_t i = 0; i < g.total(); ++i) out.data[i] = f(g.point(i));
  return out;
}

SampledField sample_vector(const GridSpec& g, int m,
                           const std::function<void(const Vec3&, std::span<double>)>& f) {
  SampledField out(g, m);
  std::vector<double> buf(m);
  for (std::size_t i = 0; i < g.total(); ++i) {
    f(g.point(i), buf);
    for (int c = 0; c < m; ++c) out.at(c, i) = buf[c];
  }
  return out;
}

double integrate(const SampledField& f) {
  if (f.comps != 1)
    throw std::invalid_argument("integrate: single-component field required");
  return pairwise_sum(f.data) * f.grid.cell_volume();
}

SampledField magnitude(const SampledField& f) {
  SampledField out(f.grid, 1);
  const std::size_t n = f.grid.total();
  if (f.comps == 1) {
    for (std::size_t i = 0; i < n; ++i) out.data[i] = std::abs(f.data[i]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (int c = 0; c < f.comps; ++c) {
      const double v = f.at(c, i);
      s += v * v;
    }
    out.data[i] = std::sqrt(s);
  }
  return out;
}

double lp_norm(const SampledField& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p < 1 not a norm");
  const SampledField mag = magnitude(f);
  if (std::isinf(p)) {
    double m = 0;
    for (double v : mag.data) m = std::max(m, v);
    return m;
  }
  std::vector<double> pw(mag.data.size());
  for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = std::pow(mag.data[i], p);
  const double s = pairwise_sum(pw) * f.grid.cell_volume();
  return std::pow(s, 1.0 / p);
}

std::vector<double> component_means(const SampledField& f) {
  std::vector<double> out(f.comps);
  const double vol = std::pow(f.grid.box, f.grid.dim);
  for (int c = 0; c < f.comps; ++c)
    out[c] = pairwise_sum(f.component(c)) * f.grid.cell_volume() / vol;
  return out;
}

SampledField& scale(SampledField& f, double c) {
  for (double& v : f.data) v *= c;
  return f;
}

namespace {
void require_same_shape(const SampledField& a, const SampledField& b) {
  if (!(a.grid == b.grid) || a.comps != b.comps)
    throw std::invalid_argument("field shape mismatch");
}
}  // namespace

SampledField sum(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  SampledField out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

SampledField difference(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  SampledField out = a;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

double max_abs_difference(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  double m = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

double rel_l2_difference(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  std::vector<double> d2(a.data.size()), b2(a.data.size());
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = a.data[i] - b.data[i];
    d2[i] = d * d;
    b2[i] = b.data[i] * b.data[i];
  }
  const double nb = pairwise_sum(b2);
  const double nd = pairwise_sum(d2);
  if (nb == 0.0) return nd == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(nd / nb);
}

Vec3 minimal_image(const GridSpec& g, std::size_t idx) {
  Vec3 x = g.point(idx);
  for (int a = 0; a < g.dim; ++a)
    if (x[a] >= 0.5 * g.box) x[a] -= g.box;
  return x;
}

}  // namespace l1lab
