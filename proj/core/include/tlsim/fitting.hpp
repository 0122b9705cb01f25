// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace tlsim {

// Result of fitting V(p) = V0 exp(-p / p0) by weighted least squares in
// log space (y = ln V against p, weights 1 / sigma_y^2, sigma_y = sigma / V).
struct ExponentialFit {
  double v0 = 0.0;
  double v0_err = 0.0;
  double p0 = 0.0;      // same unit as the supplied pressures
  double p0_err = 0.0;
  double slope = 0.0;   // -1 / p0
  double slope_err = 0.0;
  double residual_norm = 0.0;  // sqrt of the (weighted) residual sum of squares
  int points_used = 0;
  int points_excluded = 0;
};

// Fits the decay. Points with non-positive visibility or visibility below
// 3 sigma are excluded (they carry no log-space information); if every sigma
// is zero the fit is unweighted and parameter errors are estimated from the
// residual scatter. Throws empty_result_error if fewer than 3 points remain
// and validity_error if the fitted slope is not a decay.
ExponentialFit fit_exponential_decay(std::span<const double> pressures,
                                     std::span<const double> visibilities,
                                     std::span<const double> sigmas);

}  // namespace tlsim
