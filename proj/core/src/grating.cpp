// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/grating.hpp"

#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

void validate(const GratingSpec& grating) {
  if (!(grating.period_m > 0.0)) throw validity_error("grating period must be positive");
  if (!(grating.slit_width_m > 0.0 && grating.slit_width_m < grating.period_m)) {
    throw validity_error("slit width must lie strictly between 0 and the period");
  }
  if (!(grating.phase_parameter >= 0.0)) {
    throw validity_error("grating phase parameter must be non-negative");
  }
}

namespace {

double raw_slit_phase(double s, double phi0) {
  const double a = 1.0 - 2.0 * s;
  const double b = 1.0 + 2.0 * s;
  return phi0 * (1.0 / square(square(a)) + 1.0 / square(square(b)));
}

}  // namespace

double slit_phase(double s, double phase_parameter) {
  if (phase_parameter == 0.0) return 0.0;
  return std::min(raw_slit_phase(s, phase_parameter), kPhaseClip);
}

double slit_clip_coordinate(double phase_parameter) {
  if (!(phase_parameter > 0.0)) throw validity_error("phase parameter must be positive");
  if (raw_slit_phase(0.0, phase_parameter) >= kPhaseClip) return 0.0;
  // raw_slit_phase is strictly increasing on (0, 1/2) and diverges at the wall.
  double lo = 0.0;
  double hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (raw_slit_phase(mid, phase_parameter) < kPhaseClip ? lo : hi) = mid;
  }
  return lo;
}

std::complex<double> amplitude_transmission(const GratingSpec& grating, double x_m) {
  const double x = wrap_centered(x_m, grating.period_m);
  const double s = x / grating.slit_width_m;
  if (std::abs(s) >= 0.5) return {0.0, 0.0};
  const double phi = slit_phase(s, grating.phase_parameter);
  return std::polar(1.0, phi);
}

std::complex<double> amplitude_coefficient(const GratingSpec& grating, long n,
                                           const AccuracySpec& acc) {
  validate(grating);
  const double f = grating.open_fraction();
  if (grating.phase_parameter == 0.0) {
    return {f * sincn(static_cast<double>(n) * f), 0.0};
  }
  const double phi0 = grating.phase_parameter;
  std::vector<double> kinks;
  const double s_clip = slit_clip_coordinate(phi0);
  if (s_clip > 0.0) kinks = {-s_clip, s_clip};
  const double nf = static_cast<double>(n) * f;
  auto integrand = [phi0, nf](double s) {
    return std::polar(1.0, slit_phase(s, phi0) - 2.0 * constants::pi * nf * s);
  };
  const auto result = integrate_complex(integrand, -0.5, 0.5, acc, kinks);
  return f * result.value;
}

double intensity_coefficient(const GratingSpec& grating, long n) {
  validate(grating);
  const double f = grating.open_fraction();
  return f * sincn(static_cast<double>(n) * f);
}

}  // namespace tlsim
