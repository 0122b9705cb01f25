// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace tlsim {

// Accuracy request for adaptive integration. A result is accepted once the
// global error estimate satisfies err <= max(abs_tol, rel_tol * |result|).
struct AccuracySpec {
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  std::uint64_t max_intervals = 50000;  // refinement budget (panels, not evals)
};

// Diagnostics from one integration.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

struct ComplexQuadratureResult {
  std::complex<double> value{0.0, 0.0};
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

// Adaptive 15-point Gauss-Kronrod integration of f over [a, b].
//
// `breakpoints` lists interior abscissae where the integrand is non-smooth or
// changes scale; the initial subdivision is split there, then panels are
// refined worst-first until the requested accuracy is met. Breakpoints
// outside (a, b) are ignored. Throws accuracy_error if the panel budget is
// exhausted before the tolerance is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const AccuracySpec& acc = {},
                           const std::vector<double>& breakpoints = {});

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, const AccuracySpec& acc = {},
                                          const std::vector<double>& breakpoints = {});

// Geometric ladder {scale * 2^k} intersected with (a, b), for seeding panel
// splits around a feature of width `scale` near a. Returns a sorted vector.
std::vector<double> geometric_breakpoints(double scale, double a, double b);

}  // namespace tlsim
