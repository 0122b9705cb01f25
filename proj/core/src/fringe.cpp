// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/fringe.hpp"

#include <cmath>
#include <complex>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

SampledFringe sample_fringe(const FourierSpectrum& spectrum, int n_positions, double mean_counts,
                            RngStream& rng) {
  if (n_positions < 8 || n_positions < 2 * spectrum.lmax() + 2) {
    throw validity_error(
        "fringe scan needs at least max(8, 2 lmax + 2) positions to avoid aliasing");
  }
  if (!(mean_counts > 0.0)) throw validity_error("mean counts must be positive");
  SampledFringe fringe;
  fringe.position_m.reserve(static_cast<std::size_t>(n_positions));
  fringe.counts.reserve(static_cast<std::size_t>(n_positions));
  const double mean_level = spectrum.t0();
  for (int k = 0; k < n_positions; ++k) {
    const double x = spectrum.period_m() * k / n_positions;
    const double mu = mean_counts * spectrum.signal(x) / mean_level;
    fringe.position_m.push_back(x);
    fringe.counts.push_back(rng.poisson(std::max(0.0, mu)));
  }
  return fringe;
}

VisibilityEstimate estimate_visibility(const SampledFringe& fringe) {
  const std::size_t n = fringe.counts.size();
  if (n < 8) throw validity_error("visibility estimation needs at least 8 positions");
  double c0 = 0.0;
  std::complex<double> c1{0.0, 0.0};
  // First discrete harmonic; positions are equidistant over one period.
  for (std::size_t k = 0; k < n; ++k) {
    const double counts = static_cast<double>(fringe.counts[k]);
    const double arg = -2.0 * constants::pi * static_cast<double>(k) / static_cast<double>(n);
    c0 += counts;
    c1 += counts * std::polar(1.0, arg);
  }
  if (c0 <= 0.0) throw empty_result_error("fringe scan recorded no counts");
  const double nd = static_cast<double>(n);
  const double mean = c0 / nd;
  const double amp = std::abs(c1) / nd;
  const double vis = 2.0 * amp / mean;

  // Shot-noise propagation for the ratio 2 |c1| / c0 with Poisson counts:
  // var(|c1| along its phase) = c0 / 2, var(c0) = c0, cov = |c1|, which
  // combine to sigma_V^2 = (2 - V^2) / c0.
  const double sigma_sq = std::max(0.0, 2.0 - square(vis)) / c0;
  VisibilityEstimate estimate;
  estimate.visibility = vis;
  estimate.sigma = std::sqrt(sigma_sq);
  estimate.mean_counts = mean;
  return estimate;
}

}  // namespace tlsim
