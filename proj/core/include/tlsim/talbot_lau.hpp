// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "tlsim/grating.hpp"
#include "tlsim/species.hpp"
#include "tlsim/spectrum.hpp"

namespace tlsim {

// Symmetric three-grating interferometer: identical gratings separated by
// equal distances `spacing_m`, illuminated by an incoherent thermal beam.
struct InterferometerGeometry {
  GratingSpec grating;
  double spacing_m = 0.0;
  int lmax = 5;  // highest stored harmonic of the detector signal
};

void validate(const InterferometerGeometry& geometry);

// Second-grating kernel B_l(xi): the l-th Fourier coefficient of the product
// t(y - xi d / 2) t*(y + xi d / 2), averaged over one period. xi measures the
// longitudinal position in units of the self-imaging length. Evaluated as a
// single overlap integral, which sums the underlying diffraction-order series
// in closed form; no order truncation is involved.
std::complex<double> talbot_coefficient(const GratingSpec& grating, long l, double xi,
                                        const AccuracySpec& acc = {1e-9, 1e-12});

// Detector-signal spectrum T_l = conj(a_l) * B_{2l}(l L / L_self) * a_l for
// the monochromatic beam wavelength; a_l are intensity coefficients of the
// outer gratings, B the central-grating kernel. The kernel order is twice
// the signal harmonic: each point source images grating 2 onto the detector
// plane magnified by two, and the incoherent source average keeps only the
// even orders of that half-period pattern (verified against the brute-force
// Fresnel oracle in the test suite).
FourierSpectrum talbot_lau_spectrum(const InterferometerGeometry& geometry, double wavelength_m,
                                    const AccuracySpec& acc = {1e-9, 1e-12});

// Classical (ray-optics) spectrum of the same three masks, i.e. the
// wavelength -> 0 limit of the above: T_l = a_l^2 * a_{2l}. This is the
// geometric shadow (moire) fringe pattern.
FourierSpectrum shadow_spectrum(const InterferometerGeometry& geometry);

// Visibility for a beam of the given mass and speed.
double visibility_at_speed(const InterferometerGeometry& geometry, const MoleculeSpecies& molecule,
                           double speed_mps, const AccuracySpec& acc = {1e-9, 1e-12});

// Finds the interaction strength phi0 such that the predicted visibility at
// `speed_mps` equals `target_visibility`. Scans [lo, hi] for a bracket, then
// bisects to ~1e-12; throws empty_result_error if no bracket exists.
double calibrate_phase_parameter(const InterferometerGeometry& geometry,
                                 const MoleculeSpecies& molecule, double speed_mps,
                                 double target_visibility, double lo = 0.0, double hi = 0.2);

}  // namespace tlsim
