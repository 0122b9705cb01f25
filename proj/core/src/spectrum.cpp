// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"

namespace tlsim {

FourierSpectrum::FourierSpectrum(double period_m, double wavelength_m,
                                 std::vector<std::complex<double>> coeffs)
    : period_m_(period_m), wavelength_m_(wavelength_m), coeffs_(std::move(coeffs)) {
  if (!(period_m_ > 0.0)) throw validity_error("spectrum period must be positive");
  if (!(wavelength_m_ >= 0.0)) throw validity_error("spectrum wavelength must be non-negative");
  if (coeffs_.empty()) throw validity_error("spectrum needs at least the mean coefficient");
  const std::complex<double> t0 = coeffs_[0];
  if (!(t0.real() > 0.0) || std::abs(t0.imag()) > 1e-12 * t0.real()) {
    throw validity_error("mean signal coefficient must be real and positive");
  }
  coeffs_[0] = {t0.real(), 0.0};
}

std::complex<double> FourierSpectrum::at(long l) const {
  const long mag = std::abs(l);
  if (mag > lmax()) return {0.0, 0.0};
  const std::complex<double> value = coeffs_[static_cast<std::size_t>(mag)];
  return l >= 0 ? value : std::conj(value);
}

double FourierSpectrum::signal(double x_m) const {
  double sum = t0();
  for (int l = 1; l <= lmax(); ++l) {
    const double arg = 2.0 * constants::pi * l * x_m / period_m_;
    const std::complex<double> tl = coeffs_[static_cast<std::size_t>(l)];
    sum += 2.0 * (tl.real() * std::cos(arg) - tl.imag() * std::sin(arg));
  }
  return sum;
}

double visibility(const FourierSpectrum& spectrum) {
  if (spectrum.lmax() < 1) throw validity_error("visibility needs the first harmonic");
  return 2.0 * std::abs(spectrum.at(1)) / spectrum.t0();
}

FringePattern transmission_curve(const FourierSpectrum& spectrum, int samples) {
  if (samples < std::max(4, 4 * spectrum.lmax())) {
    throw validity_error("fringe sampling must resolve the highest stored harmonic");
  }
  FringePattern pattern;
  pattern.position_m.resize(static_cast<std::size_t>(samples));
  pattern.signal.resize(static_cast<std::size_t>(samples));
  double max_signal = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = spectrum.period_m() * k / samples;
    const double s = spectrum.signal(x);
    pattern.position_m[static_cast<std::size_t>(k)] = x;
    pattern.signal[static_cast<std::size_t>(k)] = s;
    max_signal = std::max(max_signal, s);
  }
  const double floor = -1e-9 * std::max(max_signal, 0.0);
  if (std::any_of(pattern.signal.begin(), pattern.signal.end(),
                  [floor](double s) { return s < floor; })) {
    throw accuracy_error("reconstructed fringe is negative; coefficients are unphysical");
  }
  return pattern;
}

}  // namespace tlsim
