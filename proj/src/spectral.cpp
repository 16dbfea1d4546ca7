// Copyright (c) 2026 the l1lab authors
// SPDX-License-Identifier: Apache-2.0

#include "l1lab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "l1lab/numerics.hpp"

namespace l1lab {

namespace {

// FFTW plan creation is not thread-safe; execution of distinct plans is.
// Plans are cached per (dim, n, sign) and reused with the new-array execute.
struct PlanKey {
  int dim;
  int n;
  int sign;
  auto operator<=>(const PlanKey&) const = default;
};

class PlanCache {
 public:
  fftw_plan get(int dim, int n, int sign, fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(mu_);
    const PlanKey key{dim, n, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    int dims[3] = {n, n, n};
    // Planned in-place with FFTW_ESTIMATE so the buffer is not clobbered and
    // results do not depend on measurement heuristics.
    fftw_plan p = fftw_plan_dft(dim, dims, buf, buf, sign, FFTW_ESTIMATE);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

struct FftBuffer {
  fftw_complex* ptr;
  explicit FftBuffer(std::size_t n) : ptr(fftw_alloc_complex(n)) {
    if (!ptr) throw std::bad_alloc();
  }
  ~FftBuffer() { fftw_free(ptr); }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
};

void run_fft(const GridSpec& g, std::complex<double>* data, int sign) {
  const std::size_t n = g.total();
  FftBuffer buf(n);
  fftw_plan plan = plan_cache().get(g.dim, g.samples, sign, buf.ptr);
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, raw, raw);
}

}  // namespace

SpectralField::SpectralField(GridSpec g, int m)
    : grid(g), comps(m), coef(static_cast<std::size_t>(m) * g.total()) {
  if (m < 1) throw std::invalid_argument("SpectralField: component count must be >= 1");
}

SpectralField forward_transform(const SampledField& f) {
  SpectralField out(f.grid, f.comps);
  const std::size_t n = f.grid.total();
  const double scale = f.grid.cell_volume();
  for (int c = 0; c < f.comps; ++c) {
    auto in = f.component(c);
    for (std::size_t i = 0; i < n; ++i) out.at(c, i) = in[i];
    run_fft(f.grid, &out.at(c, 0), FFTW_FORWARD);
    for (std::size_t i = 0; i < n; ++i) out.at(c, i) *= scale;
  }
  return out;
}

SampledField inverse_transform(const SpectralField& s, double* imag_residual) {
  SampledField out(s.grid, s.comps);
  const std::size_t n = s.grid.total();
  const double scale = 1.0 / std::pow(s.grid.box, s.grid.dim);
  double imag2 = 0.0, real2 = 0.0;
  std::vector<std::complex<double>> work(n);
  for (int c = 0; c < s.comps; ++c) {
    for (std::size_t i = 0; i < n; ++i) work[i] = s.at(c, i);
    run_fft(s.grid, work.data(), FFTW_BACKWARD);
    auto dst = out.component(c);
    for (std::size_t i = 0; i < n; ++i) {
      const std::complex<double> v = work[i] * scale;
      dst[i] = v.real();
      real2 += v.real() * v.real();
      imag2 += v.imag() * v.imag();
    }
  }
  if (imag_residual)
    *imag_residual = real2 > 0 ? std::sqrt(imag2 / real2) : std::sqrt(imag2);
  return out;
}

namespace {

SampledField apply_multiplier_impl(
    const SampledField& f,
    const std::function<std::complex<double>(std::size_t)>& sigma_at,
    std::complex<double> sigma_zero, bool zero_finite,
    std::optional<ZeroModePolicy> policy) {
  if (!zero_finite && !policy)
    throw std::invalid_argument("zero-mode policy required");
  const bool annihilate =
      policy.has_value() && *policy == ZeroModePolicy::kAnnihilate;
  SpectralField s = forward_transform(f);
  const std::size_t n = f.grid.total();
  std::vector<std::complex<double>> sig(n);
  for (std::size_t i = 0; i < n; ++i) sig[i] = sigma_at(i);
  sig[0] = annihilate ? 0.0 : sigma_zero;
  for (int c = 0; c < f.comps; ++c)
    for (std::size_t i = 0; i < n; ++i) s.at(c, i) *= sig[i];
  return inverse_transform(s);
}

}  // namespace

SampledField apply_multiplier(const SampledField& f,
                              const std::function<std::complex<double>(const Vec3&)>& sigma,
                              std::optional<ZeroModePolicy> policy) {
  const Vec3 zero{0, 0, 0};
  const std::complex<double> s0 = sigma(zero);
  const bool finite0 = std::isfinite(s0.real()) && std::isfinite(s0.imag());
  const GridSpec& g = f.grid;
  return apply_multiplier_impl(
      f, [&](std::size_t i) { return sigma(g.frequency(i)); }, s0, finite0, policy);
}

SampledField apply_radial_multiplier(const SampledField& f,
                                     const std::function<double(double)>& sigma_of_norm2,
                                     std::optional<ZeroModePolicy> policy) {
  const double s0 = sigma_of_norm2(0.0);
  const GridSpec& g = f.grid;
  return apply_multiplier_impl(
      f, [&](std::size_t i) { return std::complex<double>(sigma_of_norm2(g.frequency_norm2(i)), 0.0); },
      s0, std::isfinite(s0), policy);
}

namespace {

// Odd (derivative) multipliers have no Hermitian partner on the unpaired
// Nyquist plane; those modes are zeroed so d stays real and nilpotent.
bool has_nyquist(const GridSpec& g, std::size_t idx) {
  const auto j = g.unflatten(idx);
  for (int a = 0; a < g.dim; ++a)
    if (j[a] == g.samples / 2) return true;
  return false;
}

}  // namespace

SampledField gradient(const SampledField& f) {
  if (f.comps != 1) throw std::invalid_argument("gradient: scalar field required");
  const GridSpec& g = f.grid;
  SpectralField s = forward_transform(f);
  SpectralField out(g, g.dim);
  const std::size_t n = g.total();
  for (std::size_t i = 0; i < n; ++i) {
    if (has_nyquist(g, i)) continue;
    const Vec3 xi = g.frequency(i);
    const std::complex<double> v = s.at(0, i);
    for (int a = 0; a < g.dim; ++a)
      out.at(a, i) = std::complex<double>(0.0, 2.0 * std::numbers::pi * xi[a]) * v;
  }
  return inverse_transform(out);
}

SampledField divergence(const SampledField& f) {
  const GridSpec& g = f.grid;
  if (f.comps != g.dim) throw std::invalid_argument("divergence: d-component field required");
  SpectralField s = forward_transform(f);
  SpectralField out(g, 1);
  const std::size_t n = g.total();
  for (std::size_t i = 0; i < n; ++i) {
    if (has_nyquist(g, i)) continue;
    const Vec3 xi = g.frequency(i);
    std::complex<double> acc = 0.0;
    for (int a = 0; a < g.dim; ++a)
      acc += std::complex<double>(0.0, 2.0 * std::numbers::pi * xi[a]) * s.at(a, i);
    out.at(0, i) = acc;
  }
  return inverse_transform(out);
}

double relative_mean(const SampledField& f) {
  const auto means = component_means(f);
  double worst = 0.0;
  for (double m : means) worst = std::max(worst, std::abs(m));
  const double scale = lp_norm(f, std::numeric_limits<double>::infinity());
  return scale > 0 ? worst / scale : worst;
}

double spectral_band_limit(const SampledField& f, double rel_tol) {
  SpectralField s = forward_transform(f);
  double peak = 0.0;
  for (const auto& v : s.coef) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double band = 0.0;
  const std::size_t n = f.grid.total();
  for (int c = 0; c < f.comps; ++c)
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(s.at(c, i)) > rel_tol * peak)
        band = std::max(band, std::sqrt(f.grid.frequency_norm2(i)));
  return band;
}

namespace {

SampledField random_spectral(
    const GridSpec& g, int m, int kmax, std::uint64_t seed, double k0,
    const std::function<std::vector<double>(const Vec3&)>* projector) {
  if (kmax < 1 || kmax >= g.samples / 2)
    throw std::invalid_argument("random_band_limited: kmax outside the representable band");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralField s(g, m);
  const std::size_t n = g.total();
  const double vol = std::pow(g.box, g.dim);

  // Visit each +/- mode pair once; the conjugate entry mirrors the draw, and
  // self-conjugate modes get a real coefficient.
  std::vector<bool> visited(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    visited[i] = true;
    const auto j = g.unflatten(i);
    bool in_band = true, is_zero = true;
    std::array<int, 3> k{0, 0, 0};
    for (int a = 0; a < g.dim; ++a) {
      k[a] = g.freq_index(j[a]);
      if (std::abs(k[a]) > kmax) in_band = false;
      if (k[a] != 0) is_zero = false;
    }
    if (!in_band || is_zero) continue;

    std::size_t mirror = 0;
    bool self_conjugate = true;
    for (int a = 0; a < g.dim; ++a) {
      const int jm = (g.samples - j[a]) % g.samples;
      mirror = mirror * g.samples + static_cast<std::size_t>(jm);
      if (jm != j[a]) self_conjugate = false;
    }
    visited[mirror] = true;

    const double damp =
        k0 > 0 ? std::exp(-(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) / (k0 * k0)) : 1.0;
    std::vector<std::complex<double>> coef(m);
    for (int c = 0; c < m; ++c) {
      const double re = gauss(rng);
      const double im = self_conjugate ? 0.0 : gauss(rng);
      coef[c] = std::complex<double>(re, im) * damp * vol;
    }
    if (projector) {
      const Vec3 xi = g.frequency(i);
      const std::vector<double> p = (*projector)(xi);
      if (p.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("projector: expected m x m row-major matrix");
      std::vector<std::complex<double>> proj(m, 0.0);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          proj[r] += p[static_cast<std::size_t>(r) * m + c] * coef[c];
      coef = std::move(proj);
    }
    for (int c = 0; c < m; ++c) {
      s.at(c, i) = coef[c];
      s.at(c, mirror) = std::conj(coef[c]);
    }
  }
  return inverse_transform(s);
}

}  // namespace

SampledField random_band_limited(const GridSpec& g, int m, int kmax, std::uint64_t seed,
                                 double k0) {
  return random_spectral(g, m, kmax, seed, k0, nullptr);
}

SampledField random_band_limited_projected(
    const GridSpec& g, int m, int kmax, std::uint64_t seed,
    const std::function<std::vector<double>(const Vec3&)>& projector, double k0) {
  return random_spectral(g, m, kmax, seed, k0, &projector);
}

}  // namespace l1lab
