// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0
//
// Uniform periodic grid on a box [0, L)^d and real sampled fields on it.
// This is the substrate every other module builds on. All reductions use a
// fixed pairwise-tree order so reported numbers are bit-reproducible.

#ifndef L1LAB_GRID_HPP
#define L1LAB_GRID_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace l1lab {

using Vec3 = std::array<double, 3>;

/// Periodic uniform grid: dimension d in {1,2,3}, box side L (same per axis),
/// n samples per axis with n a power of two. Grid points sit at j*(L/n).
/// The frequency lattice is { k/L : k integer, k in [-n/2, n/2) } per axis.
struct GridSpec {
  int dim;
  double box;
  int samples;

  GridSpec(int d, double L, int n);

  double cell() const { return box / samples; }
  double cell_volume() const;
  std::size_t total() const;

  /// Integer frequency for storage index j along one axis, in [-n/2, n/2).
  int freq_index(int j) const { return j < samples / 2 ? j : j - samples; }

  /// Decompose a flat row-major index into per-axis indices.
  std::array<int, 3> unflatten(std::size_t idx) const;

  /// Physical coordinates of the grid point with flat index idx.
  Vec3 point(std::size_t idx) const;

  /// Frequency vector xi = k/L of the lattice mode with flat index idx.
  Vec3 frequency(std::size_t idx) const;

  /// Squared length of the frequency vector for flat index idx.
  double frequency_norm2(std::size_t idx) const;

  bool operator==(const GridSpec&) const = default;
};

/// Real field sampled on a GridSpec with m components. Components are stored
/// contiguously: data[c * n^d + flat]. Values must stay finite.
struct SampledField {
  GridSpec grid;
  int comps;
  std::vector<double> data;

  SampledField(GridSpec g, int m);
  SampledField(GridSpec g, int m, std::vector<double> values);

  std::span<double> component(int c);
  std::span<const double> component(int c) const;

  double& at(int c, std::size_t idx) { return data[static_cast<std::size_t>(c) * grid.total() + idx]; }
  double at(int c, std::size_t idx) const { return data[static_cast<std::size_t>(c) * grid.total() + idx]; }

  void check_finite() const;
};

/// Fill a single-component field from a function of position.
SampledField sample_scalar(const GridSpec& g, const std::function<double(const Vec3&)>& f);

/// Fill an m-component field from a function of position.
SampledField sample_vector(const GridSpec& g, int m,
                           const std::function<void(const Vec3&, std::span<double>)>& f);

/// Cell-volume-weighted sum of a single-component field (deterministic
/// pairwise order). Rejects multi-component input.
double integrate(const SampledField& f);

/// L^p norm over the pointwise Euclidean magnitude of the components,
/// p in [1, inf]; p < 1 is rejected. Pass infinity for the sup norm.
double lp_norm(const SampledField& f, double p);

/// Pointwise Euclidean magnitude as a single-component field.
SampledField magnitude(const SampledField& f);

/// Mean of each component (integral / volume).
std::vector<double> component_means(const SampledField& f);

// Small field algebra used throughout the experiments.
SampledField& scale(SampledField& f, double c);
SampledField sum(const SampledField& a, const SampledField& b);
SampledField difference(const SampledField& a, const SampledField& b);
double max_abs_difference(const SampledField& a, const SampledField& b);
double rel_l2_difference(const SampledField& a, const SampledField& b);

/// Minimal-image displacement of grid point idx from the origin, each
/// coordinate folded into [-L/2, L/2).
Vec3 minimal_image(const GridSpec& g, std::size_t idx);

}  // namespace l1lab

#endif
