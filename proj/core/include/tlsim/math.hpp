// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "tlsim/constants.hpp"

namespace tlsim {

// sinc(x) = sin(x) / x, with a Taylor guard near zero. Relative error < 1e-16.
inline double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

// Normalized variant sincn(x) = sin(pi x) / (pi x); zeros at nonzero integers.
inline double sincn(double x) { return sinc(constants::pi * x); }

constexpr double square(double x) { return x * x; }

// Wraps x into the half-open interval [-period/2, period/2).
inline double wrap_centered(double x, double period) {
  double y = std::remainder(x, period);
  if (y >= period / 2) y -= period;  // remainder may return exactly +period/2
  return y;
}

}  // namespace tlsim
