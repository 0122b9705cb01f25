// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/species.hpp"

#include <array>
#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/units.hpp"

namespace tlsim {

double GasSpecies::mass_kg() const { return units::amu_to_kg(mass_amu); }

double MoleculeSpecies::mass_kg() const { return units::amu_to_kg(mass_amu); }

MoleculeSpecies c70() { return {"C70", 840.77}; }

namespace {

const std::array<GasSpecies, 9> kGasTable{{
    {"H2", 2.016, 0.80},
    {"D2", 4.028, 0.77},
    {"He", 4.003, 0.31},
    {"CH4", 16.043, 3.3},
    {"N2", 28.014, 2.1},
    {"Ne", 20.180, 0.71},
    {"Ar", 39.948, 2.3},
    {"Kr", 83.798, 3.4},
    {"Xe", 131.293, 5.1},
}};

}  // namespace

std::span<const GasSpecies> gas_table() { return kGasTable; }

const GasSpecies& find_gas(std::string_view name) {
  for (const GasSpecies& gas : kGasTable) {
    if (gas.name == name) return gas;
  }
  throw config_error("unknown gas species '" + std::string(name) + "'");
}

double ThermalGasState::number_density() const {
  return pressure_pa / (constants::boltzmann * temperature_k);
}

double ThermalGasState::most_probable_speed() const {
  return tlsim::most_probable_speed(gas.mass_kg(), temperature_k);
}

ThermalGasState make_gas_state(GasSpecies gas, double temperature_k, double pressure_pa) {
  if (!(gas.mass_amu > 0.0)) throw validity_error("gas mass must be positive");
  if (!(gas.c6_mev_nm6 > 0.0)) throw validity_error("gas dispersion coefficient must be positive");
  if (!(temperature_k > 0.0)) throw validity_error("gas temperature must be positive");
  if (!(pressure_pa >= 0.0)) throw validity_error("gas pressure must be non-negative");
  return {std::move(gas), temperature_k, pressure_pa};
}

double dispersion_coefficient_from_mass(double mass_amu) {
  if (!(mass_amu > 0.0)) throw validity_error("particle mass must be positive");
  return 3.5e-3 * mass_amu;
}

}  // namespace tlsim
