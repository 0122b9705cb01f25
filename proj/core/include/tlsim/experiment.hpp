// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tlsim/beamline.hpp"
#include "tlsim/collisions.hpp"
#include "tlsim/fitting.hpp"
#include "tlsim/fringe.hpp"
#include "tlsim/talbot_lau.hpp"

namespace tlsim {

// Measurement imperfections applied to each scan point.
struct NoiseModel {
  bool shot_noise = false;     // simulate a counted fringe scan per point
  double mean_counts = 50000;  // mean counts per fringe position
  int fringe_positions = 16;
  double contrast_floor = 1.0;  // systematic contrast reduction factor (0, 1]
  double gaussian_rel = 0.0;    // extra multiplicative Gaussian noise on V

  bool noiseless() const { return !shot_noise && gaussian_rel == 0.0; }
};

void validate(const NoiseModel& noise);

struct ScanConditions {
  InterferometerGeometry geometry;
  MoleculeSpecies molecule;
  double beam_speed_mps = 0.0;
  GasSpecies gas;
  double temperature_k = 300.0;
  ScatteringModel decoherence = ScatteringModel::complete();
  NoiseModel noise;
  AccuracySpec accuracy{1e-6, 1e-9};  // damping quadratures
  // Soft upper bound of the scanned range (default 2.5e-6 mbar); higher
  // pressures only warn — the model itself stays valid.
  double soft_max_pressure_pa = 2.5e-4;
};

struct ScanPoint {
  double pressure_pa = 0.0;
  double visibility = 0.0;
  double sigma = 0.0;  // 0 for noiseless points
};

struct PressureScan {
  std::vector<ScanPoint> points;
  double vacuum_visibility = 0.0;            // model value at p = 0, before noise
  double predicted_decay_pressure_pa = 0.0;  // kB T / (2 L sigma_eff)
};

// Log-spaced pressure grid [lo, hi] with `points` entries, prepended with an
// exact-vacuum point when include_vacuum is set.
std::vector<double> pressure_grid(double lo_pa, double hi_pa, int points, bool include_vacuum);

// Monochromatic-beam scan: damped spectrum per pressure, visibility read off,
// noise applied. Pressures must be non-negative and strictly increasing.
PressureScan simulate_pressure_scan(const ScanConditions& conditions,
                                    std::span<const double> pressures_pa, std::uint64_t seed);

// Full-instrument scan: the molecule distribution behind the velocity
// selector is simulated per pressure (collisional transport included) and
// the visibility is the speed average of V0(v) exp(-p / p0(v)).
struct BeamlineScanConditions {
  ScanConditions base;
  BeamlineConfig beamline;
  CollisionKickModel kick;
  BeamlineRunParams run;  // run.seed is replaced per scan point
};

PressureScan simulate_beamline_scan(const BeamlineScanConditions& conditions,
                                    std::span<const double> pressures_pa, std::uint64_t seed);

// Fits a simulated scan; convenience wrapper around fit_exponential_decay.
ExponentialFit fit_scan(const PressureScan& scan);

// One gas of a survey: predicted decay pressure against the value recovered
// from a simulated noisy scan.
struct SurveyRow {
  GasSpecies gas;
  double p0_predicted_pa = 0.0;
  double p0_fitted_pa = 0.0;
  double ratio = 0.0;  // fitted / predicted
};

std::vector<SurveyRow> gas_survey(const ScanConditions& conditions,
                                  std::span<const GasSpecies> gases,
                                  std::span<const double> pressures_pa, std::uint64_t seed);

// Vacuum requirement for a hypothetical heavy slow particle: the dispersion
// coefficient is estimated from the mass alone and the background is N2-like.
struct VacuumRequirement {
  double mass_amu = 0.0;
  double beam_speed_mps = 0.0;
  double spacing_m = 0.0;
  double temperature_k = 0.0;
  double c6_mev_nm6 = 0.0;
  double sigma_eff_m2 = 0.0;
  double decay_pressure_pa = 0.0;
};

VacuumRequirement extrapolate_vacuum_requirement(double mass_amu, double beam_speed_mps,
                                                 double spacing_m, double temperature_k);

}  // namespace tlsim
