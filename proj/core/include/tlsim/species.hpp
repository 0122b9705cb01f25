// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>

namespace tlsim {

// A residual-gas species colliding with the beam.
struct GasSpecies {
  std::string name;
  double mass_amu = 0.0;
  double c6_mev_nm6 = 0.0;  // dispersion coefficient of the gas-molecule pair

  double mass_kg() const;
};

// The interfering (beam) particle.
struct MoleculeSpecies {
  std::string name;
  double mass_amu = 0.0;

  double mass_kg() const;
};

// Fullerene C70, the default beam species.
MoleculeSpecies c70();

// Tabulated residual gases (dispersion coefficients for the C70 pair).
std::span<const GasSpecies> gas_table();

// Case-sensitive lookup in gas_table(); throws config_error if absent.
const GasSpecies& find_gas(std::string_view name);

// Thermal gas characterized by temperature and pressure.
struct ThermalGasState {
  GasSpecies gas;
  double temperature_k = 0.0;
  double pressure_pa = 0.0;

  double number_density() const;       // 1 / m^3, ideal gas
  double most_probable_speed() const;  // m / s
};

// Validates T > 0 and p >= 0; throws validity_error otherwise.
ThermalGasState make_gas_state(GasSpecies gas, double temperature_k, double pressure_pa);

// Estimates the dispersion coefficient of a pair (heavy particle, N2-like gas)
// from the heavy particle's mass alone; returns meV nm^6.
double dispersion_coefficient_from_mass(double mass_amu);

}  // namespace tlsim
