// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tlsim/quadrature.hpp"
#include "tlsim/scattering.hpp"
#include "tlsim/species.hpp"
#include "tlsim/spectrum.hpp"
#include "tlsim/talbot_lau.hpp"

namespace tlsim {

// Effective total cross-section (m^2) for a dispersion-dominated collision
// between the beam (speed v_m) and a thermal gas. Valid while the beam is
// slow against the gas: warns for v_m above half the most probable gas speed,
// throws validity_error above it.
double effective_cross_section(const GasSpecies& gas, double beam_speed_mps,
                               double temperature_k);

// Fraction of fringe contrast a single collision leaves intact, as a function
// of the transverse path separation delta_r at the collision point. Equals
// the collision-averaged phase factor of the momentum kick; 1 at delta_r = 0,
// falling to 0 (complete) or to a model-dependent floor.
double coherence_after_collision(double delta_r_m, const GasSpecies& gas, double temperature_k,
                                 const ScatteringModel& model, const AccuracySpec& acc = {});

// Closed form of the above for isotropic scattering:
// (1 - exp(-b^2)) / b^2 with b = m_gas * v_gas_mp * delta_r / hbar.
double coherence_after_collision_isotropic(double delta_r_m, const GasSpecies& gas,
                                           double temperature_k);

// Exponents D_l >= 0 of harmonic damping T_l -> T_l exp(-D_l) accumulated
// over the full traversal: D_l = 2 n sigma (L - integral of the coherence
// kernel along the machine). D_0 = 0; D_l is non-decreasing in l.
std::vector<double> decoherence_exponents(const FourierSpectrum& spectrum,
                                          const ThermalGasState& gas_state, double beam_speed_mps,
                                          double spacing_m, const ScatteringModel& model,
                                          const AccuracySpec& acc = {});

// Applies the damping to a spectrum (requires spectrum.wavelength_m() > 0).
FourierSpectrum decohered_spectrum(const FourierSpectrum& spectrum,
                                   const ThermalGasState& gas_state, double beam_speed_mps,
                                   double spacing_m, const ScatteringModel& model,
                                   const AccuracySpec& acc = {});

// Pressure (Pa) at which collisional damping reduces visibility by 1/e:
// kB T / (2 L sigma_eff).
double decoherence_pressure(const GasSpecies& gas, double beam_speed_mps, double temperature_k,
                            double spacing_m);

// V(p) = V0 exp(-p / p0).
double visibility_vs_pressure(double vacuum_visibility, double pressure_pa,
                              double decoherence_pressure_pa);

}  // namespace tlsim
