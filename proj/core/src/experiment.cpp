// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/experiment.hpp"

#include <cmath>
#include <optional>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

void validate(const NoiseModel& noise) {
  if (!(noise.mean_counts > 0.0)) throw validity_error("mean counts must be positive");
  if (noise.fringe_positions < 4) throw validity_error("fringe scan needs at least 4 positions");
  if (!(noise.contrast_floor > 0.0 && noise.contrast_floor <= 1.0)) {
    throw validity_error("contrast floor must lie in (0, 1]");
  }
  if (!(noise.gaussian_rel >= 0.0)) throw validity_error("noise level must be non-negative");
}

std::vector<double> pressure_grid(double lo_pa, double hi_pa, int points, bool include_vacuum) {
  if (!(lo_pa > 0.0 && hi_pa > lo_pa)) throw validity_error("pressure grid range is empty");
  if (points < 2) throw validity_error("pressure grid needs at least 2 points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points) + 1);
  if (include_vacuum) grid.push_back(0.0);
  const double log_ratio = std::log(hi_pa / lo_pa);
  for (int k = 0; k < points; ++k) {
    grid.push_back(lo_pa * std::exp(log_ratio * k / (points - 1)));
  }
  // pin the endpoints exactly (the log round-trip can drift an ulp past them)
  grid[include_vacuum ? 1 : 0] = lo_pa;
  grid.back() = hi_pa;
  return grid;
}

namespace {

void check_pressures(std::span<const double> pressures, double soft_max_pa) {
  if (pressures.empty()) throw validity_error("pressure list is empty");
  double prev = -1.0;
  for (double p : pressures) {
    if (!(p >= 0.0)) throw validity_error("pressures must be non-negative");
    if (!(p > prev)) throw validity_error("pressures must be strictly increasing");
    prev = p;
  }
  // tolerance absorbs representation error from unit conversions at the bound
  if (prev > soft_max_pa * (1.0 + 1e-9)) {
    emit_warning("scan extends beyond the default pressure range (2.5e-6 mbar)");
  }
}

// Applies the instrument noise model to one model visibility. The fringe
// period is arbitrary for the estimate; harmonics above 1 are not needed
// because the estimator only reads the first one.
ScanPoint make_point(double pressure_pa, double model_visibility, const NoiseModel& noise,
                     RngStream& rng) {
  ScanPoint point;
  point.pressure_pa = pressure_pa;
  double v = noise.contrast_floor * model_visibility;
  double sigma = 0.0;
  if (noise.shot_noise) {
    const FourierSpectrum ideal(1.0, 0.0, {{1.0, 0.0}, {0.5 * v, 0.0}});
    const SampledFringe fringe =
        sample_fringe(ideal, noise.fringe_positions, noise.mean_counts, rng);
    const VisibilityEstimate estimate = estimate_visibility(fringe);
    v = estimate.visibility;
    sigma = estimate.sigma;
  }
  if (noise.gaussian_rel > 0.0) {
    v *= 1.0 + noise.gaussian_rel * rng.normal();
    sigma = std::hypot(sigma, noise.gaussian_rel * std::abs(v));
  }
  point.visibility = v;
  point.sigma = sigma;
  return point;
}

}  // namespace

PressureScan simulate_pressure_scan(const ScanConditions& conditions,
                                    std::span<const double> pressures_pa, std::uint64_t seed) {
  validate(conditions.geometry);
  validate(conditions.noise);
  validate(conditions.decoherence);
  check_pressures(pressures_pa, conditions.soft_max_pressure_pa);

  const double wavelength =
      de_broglie_wavelength(conditions.molecule.mass_kg(), conditions.beam_speed_mps);
  const FourierSpectrum vacuum_spectrum =
      talbot_lau_spectrum(conditions.geometry, wavelength);

  PressureScan scan;
  scan.vacuum_visibility = conditions.noise.contrast_floor * visibility(vacuum_spectrum);
  scan.predicted_decay_pressure_pa =
      decoherence_pressure(conditions.gas, conditions.beam_speed_mps, conditions.temperature_k,
                           conditions.geometry.spacing_m);

  // Damping exponents are proportional to the gas density; one quadrature
  // pass at a reference pressure serves the whole scan.
  constexpr double kReferencePressure = 1.0;  // Pa
  const ThermalGasState reference_state =
      make_gas_state(conditions.gas, conditions.temperature_k, kReferencePressure);
  const std::vector<double> reference_exponents =
      decoherence_exponents(vacuum_spectrum, reference_state, conditions.beam_speed_mps,
                            conditions.geometry.spacing_m, conditions.decoherence,
                            conditions.accuracy);

  scan.points.reserve(pressures_pa.size());
  for (std::size_t i = 0; i < pressures_pa.size(); ++i) {
    const double p = pressures_pa[i];
    std::vector<std::complex<double>> coeffs = vacuum_spectrum.coefficients();
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
      coeffs[l] *= std::exp(-reference_exponents[l] * p / kReferencePressure);
    }
    const FourierSpectrum damped(vacuum_spectrum.period_m(), wavelength, std::move(coeffs));
    RngStream rng(seed, i);
    scan.points.push_back(make_point(p, visibility(damped), conditions.noise, rng));
  }
  return scan;
}

PressureScan simulate_beamline_scan(const BeamlineScanConditions& conditions,
                                    std::span<const double> pressures_pa, std::uint64_t seed) {
  const ScanConditions& base = conditions.base;
  validate(base.geometry);
  validate(base.noise);
  validate(conditions.beamline);
  check_pressures(pressures_pa, base.soft_max_pressure_pa);

  // Vacuum visibility per speed, cached on the fixed histogram bins.
  std::vector<std::optional<double>> cache(
      static_cast<std::size_t>(conditions.run.histogram_bins));
  const double bin_width = (conditions.run.histogram_max_mps - conditions.run.histogram_min_mps) /
                           conditions.run.histogram_bins;
  auto vacuum_visibility_of_speed = [&](double v) {
    const auto bin = static_cast<std::size_t>(
        std::min<double>(conditions.run.histogram_bins - 1.0,
                         std::max(0.0, (v - conditions.run.histogram_min_mps) / bin_width)));
    if (!cache[bin]) {
      cache[bin] = visibility_at_speed(base.geometry, base.molecule, v);
    }
    return *cache[bin];
  };
  auto decay_pressure_of_speed = [&](double v) {
    return decoherence_pressure(base.gas, v, base.temperature_k, base.geometry.spacing_m);
  };

  PressureScan scan;
  scan.predicted_decay_pressure_pa = decoherence_pressure(
      base.gas, base.beam_speed_mps, base.temperature_k, base.geometry.spacing_m);

  BeamlineRunParams vacuum_params = conditions.run;
  vacuum_params.seed = seed;
  const TransportConditions vacuum_transport{
      make_gas_state(base.gas, base.temperature_k, 0.0), conditions.kick};
  const DetectedDistribution vacuum_dist =
      detected_speed_distribution(conditions.beamline, vacuum_transport, vacuum_params);
  scan.vacuum_visibility = base.noise.contrast_floor *
                           corrected_visibility(vacuum_dist, vacuum_visibility_of_speed,
                                                decay_pressure_of_speed, 0.0);

  scan.points.reserve(pressures_pa.size());
  for (std::size_t i = 0; i < pressures_pa.size(); ++i) {
    const double p = pressures_pa[i];
    BeamlineRunParams params = conditions.run;
    params.seed = seed + i + 1;  // independent measurement per scan point
    const TransportConditions transport{make_gas_state(base.gas, base.temperature_k, p),
                                        conditions.kick};
    double model = 0.0;
    try {
      const DetectedDistribution dist =
          detected_speed_distribution(conditions.beamline, transport, params);
      model = corrected_visibility(dist, vacuum_visibility_of_speed, decay_pressure_of_speed, p);
    } catch (const empty_result_error&) {
      // At high pressure the sampled trajectories can all be scattered out of
      // the acceptance; the speed weighting then falls back to the vacuum
      // selection, which the decay factor dominates anyway at that point.
      emit_warning("no transported survivors at one scan pressure; "
                   "using the vacuum speed distribution for its weighting");
      model = corrected_visibility(vacuum_dist, vacuum_visibility_of_speed,
                                   decay_pressure_of_speed, p);
    }
    RngStream rng(seed, i);
    scan.points.push_back(make_point(p, model, base.noise, rng));
  }
  return scan;
}

ExponentialFit fit_scan(const PressureScan& scan) {
  std::vector<double> pressures, visibilities, sigmas;
  pressures.reserve(scan.points.size());
  visibilities.reserve(scan.points.size());
  sigmas.reserve(scan.points.size());
  for (const ScanPoint& point : scan.points) {
    pressures.push_back(point.pressure_pa);
    visibilities.push_back(point.visibility);
    sigmas.push_back(point.sigma);
  }
  return fit_exponential_decay(pressures, visibilities, sigmas);
}

std::vector<SurveyRow> gas_survey(const ScanConditions& conditions,
                                  std::span<const GasSpecies> gases,
                                  std::span<const double> pressures_pa, std::uint64_t seed) {
  if (gases.empty()) throw validity_error("gas survey needs at least one gas");
  std::vector<SurveyRow> rows;
  rows.reserve(gases.size());
  for (std::size_t i = 0; i < gases.size(); ++i) {
    ScanConditions per_gas = conditions;
    per_gas.gas = gases[i];
    const PressureScan scan =
        simulate_pressure_scan(per_gas, pressures_pa, seed + 7919 * (i + 1));
    const ExponentialFit fit = fit_scan(scan);
    SurveyRow row;
    row.gas = gases[i];
    row.p0_predicted_pa = scan.predicted_decay_pressure_pa;
    row.p0_fitted_pa = fit.p0;
    row.ratio = fit.p0 / scan.predicted_decay_pressure_pa;
    rows.push_back(row);
  }
  return rows;
}

VacuumRequirement extrapolate_vacuum_requirement(double mass_amu, double beam_speed_mps,
                                                 double spacing_m, double temperature_k) {
  VacuumRequirement req;
  req.mass_amu = mass_amu;
  req.beam_speed_mps = beam_speed_mps;
  req.spacing_m = spacing_m;
  req.temperature_k = temperature_k;
  req.c6_mev_nm6 = dispersion_coefficient_from_mass(mass_amu);
  GasSpecies background = find_gas("N2");
  background.c6_mev_nm6 = req.c6_mev_nm6;
  req.sigma_eff_m2 = effective_cross_section(background, beam_speed_mps, temperature_k);
  req.decay_pressure_pa =
      decoherence_pressure(background, beam_speed_mps, temperature_k, spacing_m);
  return req;
}

}  // namespace tlsim
