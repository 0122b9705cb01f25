// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "tlsim/quadrature.hpp"

namespace tlsim {

// The slit-edge interaction phase saturates at this magnitude (radians).
// Trajectories passing closer to a wall pick up a constant phase instead of
// a divergent one; the transmitted amplitude keeps modulus 1 inside a slit.
inline constexpr double kPhaseClip = 20.0;

// One periodic grating: geometric slits plus an attractive wall interaction
// described by a single strength parameter.
struct GratingSpec {
  double period_m = 0.0;
  double slit_width_m = 0.0;
  double phase_parameter = 0.0;  // phi0 >= 0; 0 means an ideal binary mask

  double open_fraction() const { return slit_width_m / period_m; }
};

// Validates 0 < slit width < period and phi0 >= 0; throws validity_error.
void validate(const GratingSpec& grating);

// Phase accumulated across one slit as a function of the reduced coordinate
// s in (-1/2, 1/2) measured from the slit center in units of the slit width:
// min(phi0 * ((1 - 2 s)^-4 + (1 + 2 s)^-4), kPhaseClip).
double slit_phase(double s, double phase_parameter);

// Reduced coordinate in [0, 1/2) beyond which the phase is saturated; a kink
// of the integrand, used as a quadrature breakpoint. Returns 0 when the whole
// slit is saturated (phi0 >= kPhaseClip / 2, constant phase, binary behavior).
// Requires phi0 > 0.
double slit_clip_coordinate(double phase_parameter);

// Complex amplitude transmission t(x), periodic in the period; modulus 1
// inside the slits (phase as above) and 0 on the bars. Slits are centered
// at integer multiples of the period.
std::complex<double> amplitude_transmission(const GratingSpec& grating, double x_m);

// Fourier coefficient b_n of t(x): (1/d) * integral of t(x) exp(-2 pi i n x / d)
// over one period. Analytic for phi0 = 0; otherwise adaptive quadrature with
// breakpoints at the saturation kinks.
std::complex<double> amplitude_coefficient(const GratingSpec& grating, long n,
                                           const AccuracySpec& acc = {1e-9, 1e-12});

// Fourier coefficient a_n of the intensity mask |t(x)|^2 = binary slit
// pattern: f * sincn(n f) with f the open fraction.
double intensity_coefficient(const GratingSpec& grating, long n);

}  // namespace tlsim
