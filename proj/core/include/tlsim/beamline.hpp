// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tlsim/rng.hpp"
#include "tlsim/scattering.hpp"
#include "tlsim/species.hpp"

namespace tlsim {

// A horizontal slit: the beam passes if |y - center| <= height / 2 at z.
struct Constriction {
  double position_m = 0.0;
  double center_m = 0.0;
  double height_m = 0.0;
};

// Gravitational velocity selector: three slits at increasing z whose centers
// follow the free-fall parabola of the design speed. Molecules launch from
// the source slit, fall under gravity, and only a narrow speed band threads
// all three slits.
struct BeamlineConfig {
  Constriction source;  // position 0
  Constriction mid;
  Constriction detector;
  MoleculeSpecies molecule;
  double oven_temperature_k = 0.0;
  double gravity_mps2 = 0.0;

  // Importance region for launch sampling. The slope cone and speed window
  // must cover every trajectory that can reach the detector; the defaults
  // produced by make_aligned_beamline do (with margin).
  double slope_min = 0.0;
  double slope_max = 0.0;
  double speed_min_mps = 0.0;  // 0 = unbounded below
  double speed_max_mps = 0.0;  // 0 = unbounded above
};

void validate(const BeamlineConfig& config);

// Builds a selector aligned for `design_speed_mps`: slit centers on the
// design parabola, launch cone wide enough for every surviving trajectory
// (15% margin), speed window [0.81, 1.25] * design speed.
BeamlineConfig make_aligned_beamline(double total_length_m, double design_speed_mps,
                                     double source_height_m, double mid_height_m,
                                     double detector_height_m, double oven_temperature_k,
                                     double gravity_mps2);

// The calibrated instrument used throughout: 2.38 m long, slits of
// 170 / 30 / 40 um, oven at 900 K, aligned for 116.5 m/s. Selects a beam of
// mean speed ~117 m/s with ~8% FWHM spread.
BeamlineConfig make_calibrated_beamline();

// Launch state drawn from the importance region: speed from the effusive
// distribution restricted to the window, height uniform across the source
// slit, slope uniform in the cone.
struct LaunchSample {
  double speed_mps = 0.0;
  double height_m = 0.0;
  double slope = 0.0;
};

LaunchSample sample_source(const BeamlineConfig& config, RngStream& rng);

// How a collision kicks the molecule in the Monte Carlo (angular law of the
// center-of-mass scattering direction).
struct CollisionKickModel {
  ScatteringKind kind = ScatteringKind::Isotropic;  // CompleteDecoherence not allowed here
  double anisotropy = 0.0;
};

// Residual gas along the whole flight path, or pressure 0 for vacuum.
struct TransportConditions {
  ThermalGasState gas;  // pressure_pa 0 disables collisions
  CollisionKickModel kick;
};

struct BeamlineRunParams {
  std::uint64_t samples = 200000;
  std::uint64_t seed = 12345;
  int threads = 1;
  double histogram_min_mps = 95.0;
  double histogram_max_mps = 145.0;
  int histogram_bins = 100;
};

// Speed histogram of the molecules that reach the detector slit.
struct DetectedDistribution {
  double histogram_min_mps = 0.0;
  double histogram_max_mps = 0.0;
  std::vector<double> weights;  // per-bin counts
  std::uint64_t samples = 0;
  std::uint64_t survivors = 0;
  double sum_speed = 0.0;
  double sum_speed_squared = 0.0;

  double bin_center(int i) const;
  double bin_width() const;
  double detected_fraction() const;  // survivors / samples within the region
  double mean_speed() const;
  double speed_variance() const;
  // Width of the histogram at half its peak height (linear interpolation).
  double fwhm() const;
};

// Propagates one launch to the detector. Returns the arrival speed if the
// molecule survives, or a negative value if it is blocked or lost. The rng
// must be the same stream that produced the launch (collision draws follow).
double propagate(const BeamlineConfig& config, const TransportConditions& conditions,
                 const LaunchSample& launch, RngStream& rng);

// Full Monte Carlo: `samples` launches on per-sample streams (stream id =
// sample index), reduced in fixed blocks so the result is identical for any
// thread count. Throws empty_result_error if nothing reaches the detector.
DetectedDistribution detected_speed_distribution(const BeamlineConfig& config,
                                                 const TransportConditions& conditions,
                                                 const BeamlineRunParams& params);

// Speed-averaged visibility under collisional decay:
// sum_bins w(v) V0(v) exp(-p / p0(v)) / sum_bins w(v).
double corrected_visibility(const DetectedDistribution& distribution,
                            const std::function<double(double)>& vacuum_visibility_of_speed,
                            const std::function<double(double)>& decay_pressure_of_speed,
                            double pressure_pa);

}  // namespace tlsim
