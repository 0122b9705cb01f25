// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace tlsim::constants {

// CODATA 2018 values, SI.
inline constexpr double planck = 6.62607015e-34;          // J s (exact)
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double boltzmann = 1.380649e-23;         // J / K (exact)
inline constexpr double atomic_mass = 1.66053906660e-27;  // kg
inline constexpr double standard_gravity = 9.80665;       // m / s^2 (exact)
inline constexpr double electron_volt = 1.602176634e-19;  // J (exact)

inline constexpr double pi = 3.141592653589793238462643383279502884;

}  // namespace tlsim::constants
