// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
//
// Slit transmission model, Fourier coefficients of one grating, and the
// spectrum container.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/grating.hpp"
#include "tlsim/math.hpp"
#include "tlsim/spectrum.hpp"

using namespace tlsim;
using doctest::Approx;

namespace {

GratingSpec standard_grating(double phase_parameter) {
  return {991e-9, 475e-9, phase_parameter};
}

// Independent midpoint-rule evaluation of the amplitude coefficient,
// b_n = (1/d) * integral t(x) exp(-2 pi i n x / d) dx over one period. The
// transmission vanishes outside the slit, so the sum covers the slit only;
// that keeps the jump discontinuities on cell boundaries and the rule
// second-order accurate.
std::complex<double> midpoint_coefficient(const GratingSpec& grating, long n, int n_steps) {
  std::complex<double> sum = 0.0;
  const double d = grating.period_m;
  const double w = grating.slit_width_m;
  for (int i = 0; i < n_steps; ++i) {
    const double x = ((i + 0.5) / n_steps - 0.5) * w;
    const double angle = -2.0 * constants::pi * double(n) * x / d;
    sum += amplitude_transmission(grating, x) *
           std::complex<double>{std::cos(angle), std::sin(angle)};
  }
  return sum * (w / d) / double(n_steps);
}

}  // namespace

TEST_CASE("grating validation enforces the geometric contract") {
  CHECK_NOTHROW(validate(standard_grating(0.0)));
  CHECK_NOTHROW(validate(standard_grating(0.05)));
  GratingSpec too_wide = {991e-9, 991e-9, 0.0};  // slit as wide as the period
  CHECK_THROWS_AS(validate(too_wide), validity_error);
  GratingSpec no_slit = {991e-9, 0.0, 0.0};
  CHECK_THROWS_AS(validate(no_slit), validity_error);
  GratingSpec negative_phase = {991e-9, 475e-9, -0.1};
  CHECK_THROWS_AS(validate(negative_phase), validity_error);
  CHECK(standard_grating(0.0).open_fraction() == Approx(475.0 / 991.0).epsilon(1e-15));
}

TEST_CASE("slit phase is symmetric, minimal at the center and saturates") {
  const double phi0 = 0.01;
  CHECK(slit_phase(0.0, phi0) == Approx(2.0 * phi0).epsilon(1e-14));
  CHECK(slit_phase(0.3, phi0) == Approx(slit_phase(-0.3, phi0)).epsilon(1e-14));
  CHECK(slit_phase(0.2, phi0) > slit_phase(0.0, phi0));
  // Close to a wall the accumulated phase would diverge; it saturates instead.
  CHECK(slit_phase(0.49999, phi0) == kPhaseClip);
  CHECK(slit_phase(-0.49999, phi0) == kPhaseClip);
}

TEST_CASE("saturation coordinate marks exactly where the clip starts") {
  for (double phi0 : {0.001, 0.0026257925711712865, 0.05, 1.0}) {
    const double s = slit_clip_coordinate(phi0);
    CHECK(s > 0.0);
    CHECK(s < 0.5);
    CHECK(slit_phase(s, phi0) == Approx(kPhaseClip).epsilon(1e-9));
    CHECK(slit_phase(s * 0.999, phi0) < kPhaseClip);
  }
  // If even the slit center sits at the clip the whole slit is saturated.
  CHECK(slit_clip_coordinate(kPhaseClip / 2.0) == 0.0);
  CHECK(slit_clip_coordinate(15.0) == 0.0);
}

TEST_CASE("amplitude transmission is a unit-modulus window") {
  const auto grating = standard_grating(0.01);
  const double d = grating.period_m;
  // Bars block completely.
  CHECK(std::abs(amplitude_transmission(grating, 0.5 * d)) == 0.0);
  CHECK(std::abs(amplitude_transmission(grating, -0.4 * d)) == 0.0);
  // Slits transmit with modulus one and the phase of the slit model (compare
  // as complex values: near the walls the clipped phase exceeds pi and arg()
  // would wrap).
  for (double s : {0.0, 0.17, -0.44}) {
    const auto t = amplitude_transmission(grating, s * grating.slit_width_m);
    CHECK(std::abs(t) == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(t - std::polar(1.0, slit_phase(s, grating.phase_parameter))) < 1e-12);
  }
  // Periodicity.
  const auto t0 = amplitude_transmission(grating, 0.1 * d);
  const auto t3 = amplitude_transmission(grating, 3.1 * d);
  CHECK(std::abs(t0 - t3) < 1e-14);
}

TEST_CASE("binary amplitude coefficients have the analytic sinc form") {
  const auto grating = standard_grating(0.0);
  const double f = grating.open_fraction();
  for (long n : {0L, 1L, 2L, 5L, 17L, -3L}) {
    const auto b = amplitude_coefficient(grating, n);
    CHECK(b.real() == Approx(f * sincn(double(n) * f)).epsilon(1e-12));
    CHECK(b.imag() == Approx(0.0).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("interacting-slit coefficients agree with blind numerical Fourier analysis") {
  const auto grating = standard_grating(0.003);
  for (long n : {0L, 1L, 5L}) {
    const auto fast = amplitude_coefficient(grating, n, {1e-11, 1e-14});
    const auto slow = midpoint_coefficient(grating, n, 400000);
    CHECK(fast.real() == Approx(slow.real()).epsilon(5e-8));
    CHECK(fast.imag() == Approx(slow.imag()).scale(std::abs(fast)).epsilon(5e-8));
  }
  // The slit profile is even around the slit center, so opposite orders are
  // equal (not conjugate: the transmission is complex-valued).
  const auto plus = amplitude_coefficient(grating, 2);
  const auto minus = amplitude_coefficient(grating, -2);
  CHECK(minus.real() == Approx(plus.real()).epsilon(1e-10));
  CHECK(minus.imag() == Approx(plus.imag()).scale(std::abs(plus)).epsilon(1e-10));
}

TEST_CASE("intensity coefficients ignore the slit phase entirely") {
  const double f = 475.0 / 991.0;
  for (double phi0 : {0.0, 0.0026257925711712865, 0.1}) {
    const auto grating = standard_grating(phi0);
    for (long n : {0L, 1L, 2L, 7L}) {
      CHECK(intensity_coefficient(grating, n) ==
            Approx(f * sincn(double(n) * f)).epsilon(1e-14));
    }
  }
}

TEST_CASE("slit interaction redistributes amplitude without creating it") {
  // |b_n| <= f for any unit-modulus slit window (triangle inequality), with
  // equality only for the binary n = 0 coefficient.
  const double f = 475.0 / 991.0;
  for (double phi0 : {0.0026257925711712865, 0.05, 0.5}) {
    const auto grating = standard_grating(phi0);
    for (long n : {0L, 1L, 2L, 3L}) {
      CHECK(std::abs(amplitude_coefficient(grating, n)) <= f * (1.0 + 1e-12));
    }
    CHECK(std::abs(amplitude_coefficient(grating, 0)) < f);
  }
  // The binary limit is approached continuously as the interaction vanishes
  // (slowly: the saturated wall layer shrinks like phi0^(1/4)).
  const auto faint = amplitude_coefficient(standard_grating(1e-12), 1);
  CHECK(faint.real() == Approx(f * sincn(f)).epsilon(1e-2));
}

TEST_CASE("spectrum container enforces a real positive mean level") {
  const std::vector<std::complex<double>> good = {{1.0, 0.0}, {0.2, 0.1}};
  CHECK_NOTHROW(FourierSpectrum(991e-9, 5e-12, good));
  const std::vector<std::complex<double>> complex_mean = {{1.0, 0.3}, {0.2, 0.0}};
  CHECK_THROWS_AS(FourierSpectrum(991e-9, 5e-12, complex_mean), validity_error);
  const std::vector<std::complex<double>> negative_mean = {{-1.0, 0.0}, {0.2, 0.0}};
  CHECK_THROWS_AS(FourierSpectrum(991e-9, 5e-12, negative_mean), validity_error);
}

TEST_CASE("spectrum access is hermitian and bounded") {
  const FourierSpectrum spectrum(991e-9, 5e-12, {{1.0, 0.0}, {0.2, 0.1}, {0.05, -0.02}});
  CHECK(spectrum.lmax() == 2);
  CHECK(spectrum.t0() == 1.0);
  CHECK(spectrum.at(1) == std::complex<double>{0.2, 0.1});
  CHECK(spectrum.at(-1) == std::conj(spectrum.at(1)));
  CHECK(spectrum.at(3) == std::complex<double>{0.0, 0.0});
  CHECK(spectrum.at(-17) == std::complex<double>{0.0, 0.0});

  // signal(x) = sum T_l exp(2 pi i l x / d) is real by hermitian pairing.
  const double d = spectrum.period_m();
  CHECK(spectrum.signal(0.0) == Approx(1.0 + 2.0 * 0.2 + 2.0 * 0.05).epsilon(1e-13));
  const double x = 0.3 * d;
  double manual = 1.0;
  for (long l = 1; l <= 2; ++l) {
    const auto term = spectrum.at(l) *
                      std::exp(std::complex<double>(0.0, 2.0 * constants::pi * l * x / d));
    manual += 2.0 * term.real();
  }
  CHECK(spectrum.signal(x) == Approx(manual).epsilon(1e-13));
}

TEST_CASE("visibility is twice the first-harmonic contrast") {
  const FourierSpectrum spectrum(991e-9, 5e-12, {{1.0, 0.0}, {0.25, 0.0}});
  CHECK(visibility(spectrum) == Approx(0.5).epsilon(1e-15));
  const FourierSpectrum quadrature_phase(991e-9, 5e-12, {{2.0, 0.0}, {0.0, 0.5}});
  CHECK(visibility(quadrature_phase) == Approx(0.5).epsilon(1e-15));
  const FourierSpectrum mean_only(991e-9, 5e-12, {{1.0, 0.0}});
  CHECK_THROWS_AS(visibility(mean_only), validity_error);
}

TEST_CASE("reconstructed fringe curves are physical or rejected") {
  const FourierSpectrum mild(991e-9, 5e-12, {{1.0, 0.0}, {0.3, 0.0}});
  const auto curve = transmission_curve(mild, 32);
  REQUIRE(curve.position_m.size() == 32);
  REQUIRE(curve.signal.size() == 32);
  for (double value : curve.signal) CHECK(value >= 0.0);
  // Uniform sampling across one period.
  const double step = curve.position_m[1] - curve.position_m[0];
  CHECK(step == Approx(mild.period_m() / 32).epsilon(1e-12));

  CHECK_THROWS_AS(transmission_curve(mild, 3), validity_error);  // too few samples

  // A first harmonic larger than half the mean dips below zero somewhere.
  const FourierSpectrum unphysical(991e-9, 5e-12, {{1.0, 0.0}, {0.8, 0.0}});
  CHECK_THROWS_AS(transmission_curve(unphysical, 64), accuracy_error);
}
