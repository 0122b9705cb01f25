// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tlsim/constants.hpp"

namespace tlsim::units {

// All internal computation is SI. Conversions live at the boundaries
// (config parsing, CSV/JSON output, tabulated material data).

inline constexpr double nanometer = 1e-9;   // m
inline constexpr double micrometer = 1e-6;  // m
inline constexpr double millimeter = 1e-3;  // m
inline constexpr double picometer = 1e-12;  // m

inline constexpr double millibar = 100.0;  // Pa

constexpr double mbar_to_pascal(double p_mbar) { return p_mbar * millibar; }
constexpr double pascal_to_mbar(double p_pa) { return p_pa / millibar; }

constexpr double amu_to_kg(double m_amu) { return m_amu * constants::atomic_mass; }
constexpr double kg_to_amu(double m_kg) { return m_kg / constants::atomic_mass; }

// Dispersion coefficients are tabulated in meV nm^6; SI is J m^6.
inline constexpr double mev_nm6 = 1e-3 * constants::electron_volt * 1e-54;  // J m^6

constexpr double mev_nm6_to_si(double c6) { return c6 * mev_nm6; }
constexpr double si_to_mev_nm6(double c6_si) { return c6_si / mev_nm6; }

constexpr double nm_to_m(double x) { return x * nanometer; }
constexpr double m_to_nm(double x) { return x / nanometer; }
constexpr double um_to_m(double x) { return x * micrometer; }
constexpr double m_to_um(double x) { return x / micrometer; }

}  // namespace tlsim::units
