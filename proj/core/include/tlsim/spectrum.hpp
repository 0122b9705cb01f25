// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace tlsim {

// Fourier representation of a periodic detector signal
// S(x) = sum_l T_l exp(2 pi i l x / d). The signal is real, so
// T_{-l} = conj(T_l) and only l >= 0 is stored.
class FourierSpectrum {
 public:
  // coeffs[l] = T_l for l = 0..lmax. T_0 must be real and positive
  // (imaginary part below 1e-12 relative is folded away); throws
  // validity_error otherwise.
  FourierSpectrum(double period_m, double wavelength_m,
                  std::vector<std::complex<double>> coeffs);

  double period_m() const { return period_m_; }
  double wavelength_m() const { return wavelength_m_; }  // 0 for classical spectra
  int lmax() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Hermitian access for any l (|l| > lmax returns 0).
  std::complex<double> at(long l) const;
  double t0() const { return coeffs_[0].real(); }

  const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }

  // Signal evaluated at position x (real by construction).
  double signal(double x_m) const;

 private:
  double period_m_ = 0.0;
  double wavelength_m_ = 0.0;
  std::vector<std::complex<double>> coeffs_;
};

// Fringe visibility 2 |T_1| / T_0; requires lmax >= 1.
double visibility(const FourierSpectrum& spectrum);

// One period of the reconstructed signal on a uniform grid.
struct FringePattern {
  std::vector<double> position_m;
  std::vector<double> signal;
};

// Samples one period at `samples` points (requires samples >= 4 * lmax).
// Throws accuracy_error if the reconstruction dips below -1e-9 * max, i.e.
// the coefficients do not describe a physical (non-negative) signal.
FringePattern transmission_curve(const FourierSpectrum& spectrum, int samples);

}  // namespace tlsim
