// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tlsim/rng.hpp"
#include "tlsim/spectrum.hpp"

namespace tlsim {

// Counts recorded while stepping the third grating across one period.
struct SampledFringe {
  std::vector<double> position_m;
  std::vector<std::uint64_t> counts;
};

// Simulates a fringe scan: at each of n_positions equidistant steps, draws
// Poisson counts with mean mean_counts * S(x) / S_mean. Requires
// n_positions >= 2 lmax + 2 (the first harmonic must be estimable without
// aliasing) and mean_counts > 0.
SampledFringe sample_fringe(const FourierSpectrum& spectrum, int n_positions, double mean_counts,
                            RngStream& rng);

struct VisibilityEstimate {
  double visibility = 0.0;
  double sigma = 0.0;       // shot-noise standard error of `visibility`
  double mean_counts = 0.0; // discrete estimate of the mean level
};

// Discrete-Fourier estimate 2 |c1| / c0 with shot-noise error propagation.
// Throws empty_result_error if the scan recorded no counts at all.
VisibilityEstimate estimate_visibility(const SampledFringe& fringe);

}  // namespace tlsim
