// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/fitting.hpp"

#include <cmath>
#include <vector>

#include "tlsim/errors.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

ExponentialFit fit_exponential_decay(std::span<const double> pressures,
                                     std::span<const double> visibilities,
                                     std::span<const double> sigmas) {
  const std::size_t n = pressures.size();
  if (visibilities.size() != n || sigmas.size() != n) {
    throw validity_error("fit inputs must have equal lengths");
  }

  struct UsablePoint {
    double x, y, sigma_y;
  };
  std::vector<UsablePoint> points;
  points.reserve(n);
  bool any_sigma = false;
  bool all_sigma = true;
  int excluded = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = visibilities[i];
    const double s = sigmas[i];
    if (!(s >= 0.0)) throw validity_error("uncertainties must be non-negative");
    // Log space is meaningless for points consistent with zero contrast.
    if (!(v > 0.0)) {
      emit_warning("excluding non-positive visibility point from the decay fit");
      ++excluded;
      continue;
    }
    if (s > 0.0 && v < 3.0 * s) {
      ++excluded;
      continue;
    }
    any_sigma = any_sigma || s > 0.0;
    all_sigma = all_sigma && s > 0.0;
    points.push_back({pressures[i], std::log(v), s / v});
  }
  if (points.size() < 3) {
    throw empty_result_error("exponential fit needs at least 3 usable points");
  }
  if (any_sigma && !all_sigma) {
    throw validity_error("cannot mix exact and noisy points in a weighted fit");
  }

  const bool weighted = any_sigma;
  double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
  for (const UsablePoint& p : points) {
    const double w = weighted ? 1.0 / square(p.sigma_y) : 1.0;
    sw += w;
    swx += w * p.x;
    swy += w * p.y;
    swxx += w * p.x * p.x;
    swxy += w * p.x * p.y;
  }
  const double det = sw * swxx - swx * swx;
  if (!(det > 0.0)) throw validity_error("pressure grid is degenerate (all points equal)");

  ExponentialFit fit;
  fit.slope = (sw * swxy - swx * swy) / det;
  const double intercept = (swxx * swy - swx * swxy) / det;
  double var_slope = sw / det;
  double var_intercept = swxx / det;
  double rss = 0.0;
  for (const UsablePoint& p : points) {
    const double w = weighted ? 1.0 / square(p.sigma_y) : 1.0;
    rss += w * square(p.y - fit.slope * p.x - intercept);
  }
  fit.residual_norm = std::sqrt(rss);
  if (!weighted) {
    // Estimate the error scale from the residual scatter.
    const double scale = rss / static_cast<double>(points.size() - 2);
    var_slope *= scale;
    var_intercept *= scale;
  }
  fit.slope_err = std::sqrt(var_slope);
  if (!(fit.slope < 0.0)) {
    throw validity_error("no decay detected: fitted slope is non-negative");
  }
  fit.p0 = -1.0 / fit.slope;
  fit.p0_err = fit.slope_err / square(fit.slope);
  fit.v0 = std::exp(intercept);
  fit.v0_err = fit.v0 * std::sqrt(var_intercept);
  fit.points_used = static_cast<int>(points.size());
  fit.points_excluded = excluded;
  return fit;
}

}  // namespace tlsim
