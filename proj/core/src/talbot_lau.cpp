// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/talbot_lau.hpp"

#include <cmath>
#include <sstream>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

void validate(const InterferometerGeometry& geometry) {
  validate(geometry.grating);
  if (!(geometry.spacing_m > 0.0)) throw validity_error("grating spacing must be positive");
  if (geometry.lmax < 1) throw validity_error("spectrum needs at least the first harmonic");
}

std::complex<double> talbot_coefficient(const GratingSpec& grating, long l, double xi,
                                        const AccuracySpec& acc) {
  validate(grating);
  const double f = grating.open_fraction();
  const double phi0 = grating.phase_parameter;

  // Work in units of the period: u in [-1/2, 1/2], slits centered at integers.
  // The integrand is the sliding self-overlap of the slit pattern; its only
  // non-smooth points are images of the slit edges and phase-saturation kinks
  // of the two shifted copies.
  std::vector<double> kinks;
  std::vector<double> features{-0.5 * f, 0.5 * f};
  if (phi0 > 0.0) {
    const double s_clip = slit_clip_coordinate(phi0);
    if (s_clip > 0.0) {
      features.push_back(-s_clip * f);
      features.push_back(s_clip * f);
    }
  }
  for (const double shift : {0.5 * xi, -0.5 * xi}) {
    for (const double feature : features) {
      kinks.push_back(wrap_centered(shift + feature, 1.0));
    }
  }

  const double d = grating.period_m;
  auto integrand = [&grating, l, xi, d](double u) {
    const std::complex<double> t_minus = amplitude_transmission(grating, (u - 0.5 * xi) * d);
    const std::complex<double> t_plus = amplitude_transmission(grating, (u + 0.5 * xi) * d);
    const double arg = -2.0 * constants::pi * static_cast<double>(l) * u;
    return t_minus * std::conj(t_plus) * std::polar(1.0, arg);
  };
  return integrate_complex(integrand, -0.5, 0.5, acc, kinks).value;
}

FourierSpectrum talbot_lau_spectrum(const InterferometerGeometry& geometry, double wavelength_m,
                                    const AccuracySpec& acc) {
  validate(geometry);
  const double self_imaging = talbot_length(geometry.grating.period_m, wavelength_m);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(geometry.lmax) + 1);
  for (int l = 0; l <= geometry.lmax; ++l) {
    const double a_l = intensity_coefficient(geometry.grating, l);
    const double xi = l * geometry.spacing_m / self_imaging;
    // The central grating enters at order 2l: a point source at distance L
    // projects the grating-2 pattern onto the detector plane magnified by
    // two, and averaging over the incoherent source comb of period d keeps
    // only the even orders of that half-period pattern.
    const std::complex<double> b_2l = talbot_coefficient(geometry.grating, 2 * l, xi, acc);
    coeffs.push_back(a_l * b_2l * a_l);
  }
  return FourierSpectrum(geometry.grating.period_m, wavelength_m, std::move(coeffs));
}

FourierSpectrum shadow_spectrum(const InterferometerGeometry& geometry) {
  validate(geometry);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(geometry.lmax) + 1);
  for (int l = 0; l <= geometry.lmax; ++l) {
    const double a_l = intensity_coefficient(geometry.grating, l);
    const double a_2l = intensity_coefficient(geometry.grating, 2 * l);
    coeffs.emplace_back(a_l * a_2l * a_l, 0.0);
  }
  return FourierSpectrum(geometry.grating.period_m, 0.0, std::move(coeffs));
}

namespace {

// Visibility needs only T_0 and T_1; avoids computing the full spectrum when
// scanning (calibration, speed averaging).
double two_coefficient_visibility(const InterferometerGeometry& geometry, double wavelength_m,
                                  const AccuracySpec& acc) {
  const GratingSpec& grating = geometry.grating;
  const double self_imaging = talbot_length(grating.period_m, wavelength_m);
  const double a0 = intensity_coefficient(grating, 0);
  const double a1 = intensity_coefficient(grating, 1);
  const std::complex<double> b0 = talbot_coefficient(grating, 0, 0.0, acc);
  const std::complex<double> b2 =
      talbot_coefficient(grating, 2, geometry.spacing_m / self_imaging, acc);
  return 2.0 * a1 * a1 * std::abs(b2) / (a0 * a0 * b0.real());
}

}  // namespace

double visibility_at_speed(const InterferometerGeometry& geometry, const MoleculeSpecies& molecule,
                           double speed_mps, const AccuracySpec& acc) {
  validate(geometry);
  const double wavelength = de_broglie_wavelength(molecule.mass_kg(), speed_mps);
  return two_coefficient_visibility(geometry, wavelength, acc);
}

double calibrate_phase_parameter(const InterferometerGeometry& geometry,
                                 const MoleculeSpecies& molecule, double speed_mps,
                                 double target_visibility, double lo, double hi) {
  validate(geometry);
  if (!(target_visibility > 0.0 && target_visibility < 1.0)) {
    throw validity_error("target visibility must lie in (0, 1)");
  }
  if (!(lo >= 0.0 && hi > lo)) throw validity_error("calibration bracket is empty");

  InterferometerGeometry trial = geometry;
  auto mismatch = [&](double phi0) {
    trial.grating.phase_parameter = phi0;
    return visibility_at_speed(trial, molecule, speed_mps) - target_visibility;
  };

  constexpr int kScanPoints = 41;
  double prev_x = lo;
  double prev_h = mismatch(lo);
  if (prev_h == 0.0) return lo;
  for (int i = 1; i < kScanPoints; ++i) {
    const double x = lo + (hi - lo) * i / (kScanPoints - 1);
    const double h = mismatch(x);
    if (h == 0.0) return x;
    if (prev_h * h < 0.0) {
      double a = prev_x;
      double b = x;
      double ha = prev_h;
      for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        const double hm = mismatch(mid);
        if (hm == 0.0) return mid;
        if (ha * hm < 0.0) {
          b = mid;
        } else {
          a = mid;
          ha = hm;
        }
      }
      return 0.5 * (a + b);
    }
    prev_x = x;
    prev_h = h;
  }
  std::ostringstream msg;
  msg << "no interaction strength in [" << lo << ", " << hi << "] reaches visibility "
      << target_visibility;
  throw empty_result_error(msg.str());
}

}  // namespace tlsim
