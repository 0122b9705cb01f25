// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace tlsim {

// Matter-wave wavelength h / (m v). Throws validity_error unless m > 0, v > 0.
double de_broglie_wavelength(double mass_kg, double speed_mps);

// Self-imaging distance d^2 / lambda of a grating of period d.
double talbot_length(double period_m, double wavelength_m);

// Most probable speed sqrt(2 kB T / m) of a thermal 3-D gas.
double most_probable_speed(double mass_kg, double temperature_k);

// Mean speed (2 / sqrt(pi)) * most_probable_speed of a thermal 3-D gas.
double mean_thermal_speed(double mass_kg, double temperature_k);

// Probability density of the speed modulus in a thermal 3-D gas:
// (4 / sqrt(pi)) v^2 / vt^3 exp(-(v / vt)^2), vt the most probable speed.
double maxwell_speed_pdf(double v_mps, double mass_kg, double temperature_k);

// Probability density of the beam speed behind an ideal effusive source:
// (2 / vw^4) v^3 exp(-(v / vw)^2), vw = sqrt(2 kB T / m).
// Mean is (3 sqrt(pi) / 4) vw.
double effusive_speed_pdf(double v_mps, double mass_kg, double temperature_k);

}  // namespace tlsim
