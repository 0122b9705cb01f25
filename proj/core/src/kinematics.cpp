// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/kinematics.hpp"

#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

double de_broglie_wavelength(double mass_kg, double speed_mps) {
  if (!(mass_kg > 0.0)) throw validity_error("mass must be positive");
  if (!(speed_mps > 0.0)) throw validity_error("speed must be positive");
  return constants::planck / (mass_kg * speed_mps);
}

double talbot_length(double period_m, double wavelength_m) {
  if (!(period_m > 0.0)) throw validity_error("grating period must be positive");
  if (!(wavelength_m > 0.0)) throw validity_error("wavelength must be positive");
  return square(period_m) / wavelength_m;
}

double most_probable_speed(double mass_kg, double temperature_k) {
  if (!(mass_kg > 0.0)) throw validity_error("mass must be positive");
  if (!(temperature_k > 0.0)) throw validity_error("temperature must be positive");
  return std::sqrt(2.0 * constants::boltzmann * temperature_k / mass_kg);
}

double mean_thermal_speed(double mass_kg, double temperature_k) {
  return 2.0 / std::sqrt(constants::pi) * most_probable_speed(mass_kg, temperature_k);
}

double maxwell_speed_pdf(double v_mps, double mass_kg, double temperature_k) {
  if (!(v_mps >= 0.0)) throw validity_error("speed must be non-negative");
  const double vt = most_probable_speed(mass_kg, temperature_k);
  const double x = v_mps / vt;
  return 4.0 / std::sqrt(constants::pi) * square(x) * std::exp(-square(x)) / vt;
}

double effusive_speed_pdf(double v_mps, double mass_kg, double temperature_k) {
  if (!(v_mps >= 0.0)) throw validity_error("speed must be non-negative");
  const double vw = most_probable_speed(mass_kg, temperature_k);
  const double x = v_mps / vw;
  return 2.0 * square(x) * x * std::exp(-square(x)) / vw;
}

}  // namespace tlsim
