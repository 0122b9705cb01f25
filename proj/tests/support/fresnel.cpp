// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "support/fresnel.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"

namespace tlsim_test {
namespace {

using std::complex;
using tlsim::constants::pi;

std::vector<complex<double>> forward_twiddles(std::size_t n) {
  std::vector<complex<double>> w(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double angle = -2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    w[j] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

void fft_with_table(std::vector<complex<double>>& a, const std::vector<complex<double>>& w,
                    bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    const std::size_t half = len / 2;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        complex<double> tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        const complex<double> u = a[base + k];
        const complex<double> v = a[base + k + half] * tw;
        a[base + k] = u + v;
        a[base + k + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (complex<double>& z : a) z *= scale;
  }
}

// Area-weighted transmission of a binary grating (period 1, slit centered on
// integer positions) for the cell [x - dx/2, x + dx/2].
double cell_transmission(double x, double dx, double open_fraction) {
  const double frac = x - std::round(x);
  const double lo = std::max(frac - dx / 2, -open_fraction / 2);
  const double hi = std::min(frac + dx / 2, open_fraction / 2);
  const double overlap = (hi - lo) / dx;
  return overlap > 0.0 ? std::min(overlap, 1.0) : 0.0;
}

}  // namespace

void fft_radix2(std::vector<complex<double>>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw tlsim::validity_error("fft_radix2 needs a power-of-two size");
  }
  fft_with_table(data, forward_twiddles(n), inverse);
}

double fresnel_reference_visibility(double open_fraction, double fresnel_parameter,
                                    const FresnelParams& params) {
  if (!(open_fraction > 0.0) || !(open_fraction < 1.0)) {
    throw tlsim::validity_error("open fraction must lie in (0, 1)");
  }
  if (!(fresnel_parameter > 0.0)) {
    throw tlsim::validity_error("the Fresnel parameter must be positive");
  }
  const std::size_t n =
      static_cast<std::size_t>(params.window_periods) * static_cast<std::size_t>(params.samples_per_period);
  if (n == 0 || (n & (n - 1)) != 0) {
    throw tlsim::validity_error("window_periods * samples_per_period must be a power of two");
  }
  const double support = params.flat_periods + params.taper_periods;
  // Geometric image of a mask point m lands near 2 m, so the propagated field
  // of the supported mask must fit the half-window; the projection must stay
  // well inside the flat part.
  if (4.0 * support > params.window_periods) {
    throw tlsim::validity_error("grating support too wide for the window");
  }
  if (params.projection_periods + 2 > params.flat_periods) {
    throw tlsim::validity_error("projection reaches the tapered grating region");
  }
  if (params.sources_per_slit < 1 || params.projection_periods < 1) {
    throw tlsim::validity_error("need at least one source and one projected period");
  }

  const double dx = 1.0 / params.samples_per_period;
  const std::size_t half_n = n / 2;
  const auto table = forward_twiddles(n);

  // Apodized second grating, sampled once.
  std::vector<double> mask(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = (static_cast<double>(k) - static_cast<double>(half_n)) * dx;
    double value = cell_transmission(x, dx, open_fraction);
    const double ax = std::abs(x);
    if (ax >= support) {
      value = 0.0;
    } else if (ax > params.flat_periods) {
      const double edge = std::cos(0.5 * pi * (ax - params.flat_periods) / params.taper_periods);
      value *= edge * edge;
    }
    mask[k] = value;
  }

  // Exact paraxial transfer function over one grating separation.
  std::vector<complex<double>> transfer(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double cycles = (k < half_n)
                              ? static_cast<double>(k)
                              : static_cast<double>(k) - static_cast<double>(n);
    const double nu = cycles / static_cast<double>(params.window_periods);
    const double phase = -pi * fresnel_parameter * nu * nu;
    transfer[k] = {std::cos(phase), std::sin(phase)};
  }

  std::vector<double> intensity(n, 0.0);
  std::vector<complex<double>> field(n);
  for (int s = 0; s < params.sources_per_slit; ++s) {
    const double y0 =
        ((s + 0.5) / params.sources_per_slit - 0.5) * open_fraction;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask[k] == 0.0) {
        field[k] = 0.0;
        continue;
      }
      const double x = (static_cast<double>(k) - static_cast<double>(half_n)) * dx;
      const double phase = pi * (x - y0) * (x - y0) / fresnel_parameter;
      field[k] = mask[k] * complex<double>{std::cos(phase), std::sin(phase)};
    }
    fft_with_table(field, table, false);
    for (std::size_t k = 0; k < n; ++k) field[k] *= transfer[k];
    fft_with_table(field, table, true);
    for (std::size_t k = 0; k < n; ++k) intensity[k] += std::norm(field[k]);
  }

  // Third grating stepped across one period; counts integrated over an exact
  // integer number of periods so other harmonics drop out identically.
  const std::size_t spp = static_cast<std::size_t>(params.samples_per_period);
  std::vector<double> scan_mask(spp);
  for (std::size_t s = 0; s < spp; ++s) {
    scan_mask[s] = cell_transmission(static_cast<double>(s) * dx, dx, open_fraction);
  }
  const std::size_t k_begin = half_n - static_cast<std::size_t>(params.projection_periods) * spp;
  const std::size_t k_end = half_n + static_cast<std::size_t>(params.projection_periods) * spp;
  double total = 0.0;
  complex<double> first_harmonic = 0.0;
  for (std::size_t shift = 0; shift < spp; ++shift) {
    double counts = 0.0;
    for (std::size_t k = k_begin; k < k_end; ++k) {
      counts += intensity[k] * scan_mask[(k - shift) % spp];
    }
    const double angle = -2.0 * pi * static_cast<double>(shift) / static_cast<double>(spp);
    total += counts;
    first_harmonic += counts * complex<double>{std::cos(angle), std::sin(angle)};
  }
  return 2.0 * std::abs(first_harmonic) / total;
}

}  // namespace tlsim_test
