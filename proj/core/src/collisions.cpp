// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/collisions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/math.hpp"
#include "tlsim/units.hpp"

namespace tlsim {

double effective_cross_section(const GasSpecies& gas, double beam_speed_mps,
                               double temperature_k) {
  if (!(beam_speed_mps > 0.0)) throw validity_error("beam speed must be positive");
  const double v_gas = most_probable_speed(gas.mass_kg(), temperature_k);
  const double ratio = beam_speed_mps / v_gas;
  if (ratio > 1.0) {
    std::ostringstream msg;
    msg << "cross-section model invalid: beam speed " << beam_speed_mps
        << " m/s exceeds the most probable gas speed " << v_gas << " m/s";
    throw validity_error(msg.str());
  }
  if (ratio > 0.5) {
    std::ostringstream msg;
    msg << "cross-section model marginal: beam speed is " << ratio
        << " of the most probable gas speed (series truncated at second order)";
    emit_warning(msg.str());
  }
  const double c6_si = units::mev_nm6_to_si(gas.c6_mev_nm6);
  return std::pow(c6_si / constants::hbar, 0.4) * std::pow(v_gas, 0.6) / beam_speed_mps *
         (8.4946 + 1.6989 * square(ratio));
}

namespace {

// Maxwell speed average of sinc(c v): closed form exp(-(c vt / 2)^2).
// Used as the inner fast path once the oscillation is too fine to resolve
// (the quadrature answer is indistinguishable from 0 there anyway).
constexpr double kInnerFastPathThreshold = 50.0;  // in units of c * vt

double maxwell_sinc_average(double c, double mass_kg, double temperature_k,
                            const AccuracySpec& acc) {
  const double vt = most_probable_speed(mass_kg, temperature_k);
  if (c * vt > kInnerFastPathThreshold) {
    return std::exp(-square(0.5 * c * vt));
  }
  auto integrand = [c, mass_kg, temperature_k](double v) {
    return maxwell_speed_pdf(v, mass_kg, temperature_k) * sinc(c * v);
  };
  AccuracySpec inner = acc;
  inner.rel_tol = std::min(acc.rel_tol, 1e-8);
  inner.abs_tol = std::min(acc.abs_tol, 1e-12);
  return integrate(integrand, 0.0, 20.0 * vt, inner).value;
}

}  // namespace

double coherence_after_collision(double delta_r_m, const GasSpecies& gas, double temperature_k,
                                 const ScatteringModel& model, const AccuracySpec& acc) {
  if (!(delta_r_m >= 0.0)) throw validity_error("path separation must be non-negative");
  validate(model);
  if (delta_r_m == 0.0) return 1.0;
  if (model.kind == ScatteringKind::CompleteDecoherence) return 0.0;

  const double mass_kg = gas.mass_kg();
  const double vt = most_probable_speed(mass_kg, temperature_k);
  // Transferred-phase scale: the kernel in u = sin(theta / 2) decays on 1/b.
  const double b = mass_kg * vt * delta_r_m / constants::hbar;

  std::vector<double> panels = geometric_breakpoints(std::min(1.0 / b, 1.0), 0.0, 1.0);
  if (model.kind == ScatteringKind::ForwardPeaked && model.anisotropy > 0.0) {
    const double g = model.anisotropy;
    const double lobe = 0.5 * (1.0 - g) / std::sqrt(g);  // angular width of the forward lobe
    const std::vector<double> more = geometric_breakpoints(std::min(lobe, 1.0), 0.0, 1.0);
    panels.insert(panels.end(), more.begin(), more.end());
  }

  // Solid-angle measure expressed in u = sin(theta / 2):
  // 2 pi sin(theta) p(cos theta) d(theta) = 4 u p(1 - 2 u^2) * 2 pi du.
  auto integrand = [&](double u) {
    const double weight = 8.0 * constants::pi * u * model.angular_density(1.0 - 2.0 * square(u));
    const double c = 2.0 * mass_kg * u * delta_r_m / constants::hbar;
    return weight * maxwell_sinc_average(c, mass_kg, temperature_k, acc);
  };
  return integrate(integrand, 0.0, 1.0, acc, panels).value;
}

double coherence_after_collision_isotropic(double delta_r_m, const GasSpecies& gas,
                                           double temperature_k) {
  if (!(delta_r_m >= 0.0)) throw validity_error("path separation must be non-negative");
  if (delta_r_m == 0.0) return 1.0;
  const double vt = most_probable_speed(gas.mass_kg(), temperature_k);
  const double b2 = square(gas.mass_kg() * vt * delta_r_m / constants::hbar);
  return -std::expm1(-b2) / b2;
}

std::vector<double> decoherence_exponents(const FourierSpectrum& spectrum,
                                          const ThermalGasState& gas_state, double beam_speed_mps,
                                          double spacing_m, const ScatteringModel& model,
                                          const AccuracySpec& acc) {
  if (!(spectrum.wavelength_m() > 0.0)) {
    throw validity_error("damping needs a matter-wave spectrum (wavelength > 0)");
  }
  if (!(spacing_m > 0.0)) throw validity_error("grating spacing must be positive");
  validate(model);
  const double sigma =
      effective_cross_section(gas_state.gas, beam_speed_mps, gas_state.temperature_k);
  const double n = gas_state.number_density();
  const double length = spacing_m;
  const double rate = 2.0 * n * sigma;

  std::vector<double> exponents(static_cast<std::size_t>(spectrum.lmax()) + 1, 0.0);
  if (n == 0.0) return exponents;
  for (int l = 1; l <= spectrum.lmax(); ++l) {
    if (model.kind == ScatteringKind::CompleteDecoherence) {
      exponents[static_cast<std::size_t>(l)] = rate * length;
      continue;
    }
    // Transverse separation grows linearly from the grating toward the ends
    // of the machine; by symmetry both halves contribute the same integral.
    const double separation_rate = l * spectrum.wavelength_m() / spectrum.period_m();
    auto kernel = [&](double z) {
      return coherence_after_collision(separation_rate * z, gas_state.gas,
                                       gas_state.temperature_k, model, acc);
    };
    const double vt = most_probable_speed(gas_state.gas.mass_kg(), gas_state.temperature_k);
    const double coherence_z = constants::hbar / (gas_state.gas.mass_kg() * vt * separation_rate);
    AccuracySpec z_acc = acc;
    z_acc.abs_tol = std::min(acc.abs_tol, acc.rel_tol * length);
    const double kept =
        integrate(kernel, 0.0, length, z_acc,
                  geometric_breakpoints(std::min(coherence_z, length), 0.0, length))
            .value;
    exponents[static_cast<std::size_t>(l)] = rate * std::max(0.0, length - kept);
  }
  return exponents;
}

FourierSpectrum decohered_spectrum(const FourierSpectrum& spectrum,
                                   const ThermalGasState& gas_state, double beam_speed_mps,
                                   double spacing_m, const ScatteringModel& model,
                                   const AccuracySpec& acc) {
  const std::vector<double> exponents =
      decoherence_exponents(spectrum, gas_state, beam_speed_mps, spacing_m, model, acc);
  std::vector<std::complex<double>> coeffs = spectrum.coefficients();
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    coeffs[l] *= std::exp(-exponents[l]);
  }
  return FourierSpectrum(spectrum.period_m(), spectrum.wavelength_m(), std::move(coeffs));
}

double decoherence_pressure(const GasSpecies& gas, double beam_speed_mps, double temperature_k,
                            double spacing_m) {
  if (!(spacing_m > 0.0)) throw validity_error("grating spacing must be positive");
  if (!(temperature_k > 0.0)) throw validity_error("temperature must be positive");
  const double sigma = effective_cross_section(gas, beam_speed_mps, temperature_k);
  return constants::boltzmann * temperature_k / (2.0 * spacing_m * sigma);
}

double visibility_vs_pressure(double vacuum_visibility, double pressure_pa,
                              double decoherence_pressure_pa) {
  if (!(vacuum_visibility >= 0.0)) throw validity_error("visibility must be non-negative");
  if (!(pressure_pa >= 0.0)) throw validity_error("pressure must be non-negative");
  if (!(decoherence_pressure_pa > 0.0)) throw validity_error("decay pressure must be positive");
  return vacuum_visibility * std::exp(-pressure_pa / decoherence_pressure_pa);
}

}  // namespace tlsim
