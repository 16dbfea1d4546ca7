// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0
//
// Spectral transforms on the periodic grid. Convention:
//   fhat(xi) = cellvol * sum_x f(x) exp(-2*pi*i x.xi),   xi on the lattice k/L,
//   f(x)    = (1/L^d) * sum_xi fhat(xi) exp(+2*pi*i x.xi).
// With this normalization the heat kernel acts as exp(-4 pi^2 t |xi|^2) and
// Parseval reads cellvol*sum|f|^2 = (1/L^d)*sum|fhat|^2.

#ifndef L1LAB_SPECTRAL_HPP
#define L1LAB_SPECTRAL_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "l1lab/grid.hpp"

namespace l1lab {

struct SpectralField {
  GridSpec grid;
  int comps;
  std::vector<std::complex<double>> coef;  // comps blocks of n^d, row-major

  SpectralField(GridSpec g, int m);

  std::complex<double>& at(int c, std::size_t idx) {
    return coef[static_cast<std::size_t>(c) * grid.total() + idx];
  }
  std::complex<double> at(int c, std::size_t idx) const {
    return coef[static_cast<std::size_t>(c) * grid.total() + idx];
  }
};

SpectralField forward_transform(const SampledField& f);

/// Inverse transform; the imaginary residue (relative to the field l2 norm)
/// can be retrieved to check that a multiplier preserved realness.
SampledField inverse_transform(const SpectralField& s, double* imag_residual = nullptr);

/// Policy for multipliers that are singular or undefined at frequency zero.
enum class ZeroModePolicy : std::uint8_t {
  kUseSigma,   // evaluate sigma at 0 like everywhere else
  kAnnihilate  // force the zero mode to 0
};

/// Componentwise spectral multiplication by sigma(xi). If sigma is not finite
/// at the zero frequency and no explicit policy is given, this throws
/// "zero-mode policy required".
SampledField apply_multiplier(const SampledField& f,
                              const std::function<std::complex<double>(const Vec3&)>& sigma,
                              std::optional<ZeroModePolicy> policy = std::nullopt);

/// Fast path for radial real multipliers sigma(|xi|^2).
SampledField apply_radial_multiplier(const SampledField& f,
                                     const std::function<double(double)>& sigma_of_norm2,
                                     std::optional<ZeroModePolicy> policy = std::nullopt);

/// Spectral gradient of a scalar field (m=1 -> m=d). The unpaired Nyquist
/// plane carries no sign information for odd derivatives and is annihilated.
SampledField gradient(const SampledField& f);

/// Spectral divergence of a d-component field (m=d -> m=1).
SampledField divergence(const SampledField& f);

/// Largest |component mean| relative to the field scale; used by operators
/// that require mean-zero data on the torus.
double relative_mean(const SampledField& f);

/// Largest frequency magnitude carrying spectral mass above rel_tol * max.
double spectral_band_limit(const SampledField& f, double rel_tol = 1e-12);

/// Random real band-limited field: independent Gaussian spectral amplitudes
/// with Hermitian symmetry, modes 0 < |k|_inf <= kmax, smooth decay
/// exp(-|k|^2/k0^2). Mean-zero by construction and deterministic in the seed.
SampledField random_band_limited(const GridSpec& g, int m, int kmax, std::uint64_t seed,
                                 double k0 = 0.0);

/// Same, but each spectral coefficient vector is projected onto the kernel of
/// a frequency-dependent matrix map (used to manufacture constraint-free
/// fields). projector(xi) must return a k x k projection matrix in row-major
/// order.
SampledField random_band_limited_projected(
    const GridSpec& g, int m, int kmax, std::uint64_t seed,
    const std::function<std::vector<double>(const Vec3&)>& projector, double k0 = 0.0);

}  // namespace l1lab

#endif
