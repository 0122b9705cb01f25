// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tlsim/beamline.hpp"
#include "tlsim/experiment.hpp"
#include "tlsim/quadrature.hpp"
#include "tlsim/scattering.hpp"
#include "tlsim/species.hpp"
#include "tlsim/talbot_lau.hpp"

namespace tlsim {

// Interaction strength of the standard gratings, fixed once by requiring a
// vacuum visibility of 0.41 for the default beam (C70 at 117 m/s) in the
// default geometry. See calibrate_phase_parameter.
inline constexpr double kCalibratedPhaseParameter = 0.0026257925711712865;

// Everything a run is allowed to configure, with defaults describing the
// reference instrument: 991 nm gratings with 475 nm slits spaced 0.22 m
// apart, a C70 beam at 117 m/s, methane background at 300 K.
struct RunConfig {
  struct Molecule {
    std::string name = "C70";
    double mass_amu = 840.77;
  } molecule;

  struct Gas {
    std::string name = "CH4";
    double mass_amu = 0.0;     // 0 = value from the gas table
    double c6_mev_nm6 = 0.0;   // 0 = value from the gas table
  } gas;

  struct Environment {
    double temperature_k = 300.0;
    double pressure_mbar = 0.0;  // ambient pressure for single-point commands
  } environment;

  struct Beam {
    double speed_mps = 117.0;
  } beam;

  struct Interferometer {
    double period_nm = 991.0;
    double slit_width_nm = 475.0;
    double spacing_m = 0.22;
    double phase_parameter = kCalibratedPhaseParameter;
    int lmax = 5;
  } interferometer;

  struct Scattering {
    std::string model = "complete";  // complete | isotropic | forward_peaked
    double anisotropy_g = 0.0;
  } scattering;

  struct Quadrature {
    double rel_tol = 1e-6;
    double abs_tol = 1e-9;
  } quadrature;

  struct Scan {
    std::string mode = "analytic";  // analytic | beamline
    double pressure_min_mbar = 5e-8;
    double pressure_max_mbar = 2.5e-6;
    int points = 8;
    bool include_vacuum = true;
    bool shot_noise = false;
    double mean_counts = 50000.0;
    int fringe_positions = 16;
    double contrast_floor = 1.0;
    double gaussian_rel_noise = 0.0;
  } scan;

  struct Beamline {
    std::uint64_t samples = 200000;
    double total_length_m = 2.38;
    double design_speed_mps = 116.5;
    double source_height_um = 170.0;
    double mid_height_um = 30.0;
    double detector_height_um = 40.0;
    double oven_temperature_k = 900.0;
    std::string kick_model = "isotropic";  // isotropic | forward_peaked
    double kick_anisotropy_g = 0.0;
    double histogram_min_mps = 95.0;
    double histogram_max_mps = 145.0;
    int histogram_bins = 100;
  } beamline;

  struct EtaProfile {
    double delta_r_min_m = 1e-13;
    double delta_r_max_m = 1e-9;
    int points = 41;
  } eta;

  struct Survey {
    std::string gases = "H2,D2,He,CH4,N2,Ne,Ar,Kr,Xe";
    double mean_counts = 2000.0;
  } survey;

  struct Extrapolate {
    double mass_amu = 5e7;
    double speed_mps = 10.0;
    double length_m = 1.0;
    double temperature_k = 300.0;
  } extrapolate;

  struct Run {
    std::uint64_t seed = 12345;
    std::string out_dir = ".";
  } run;
};

// Parses INI-style text: [section] headers, key = value lines, # or ;
// comments. Unknown sections or keys, malformed lines, type errors,
// out-of-range values and duplicate keys raise config_error carrying
// `origin` and the 1-based line number. Absent keys keep their defaults;
// empty text yields the default configuration.
RunConfig parse_config_text(std::string_view text, std::string_view origin = "<config>");

// Reads and parses a file; a missing or unreadable file is a config_error.
RunConfig load_config_file(const std::string& path);

// Cross-field checks that single keys cannot express (slit narrower than the
// period, ordered scan bounds, ...). Called by the parser after the last key;
// call it directly for configurations built in code.
void validate(const RunConfig& config);

// Round-trips through parse_config_text: every key, default or not, in
// canonical section order, doubles with full precision.
std::string serialize_config(const RunConfig& config);

// Same content as serialize_config as structured JSON (one object per
// section), used for the config echo of result envelopes.
nlohmann::ordered_json config_to_json(const RunConfig& config);

// --- resolution into model objects -----------------------------------------

MoleculeSpecies resolve_molecule(const RunConfig& config);

// Table lookup with per-key overrides; a gas absent from the table needs
// both mass_amu and c6_mev_nm6 set.
GasSpecies resolve_gas(const RunConfig& config);

// resolve_gas + environment temperature and pressure.
ThermalGasState resolve_gas_state(const RunConfig& config);

InterferometerGeometry resolve_geometry(const RunConfig& config);
ScatteringModel resolve_scattering(const RunConfig& config);
AccuracySpec resolve_accuracy(const RunConfig& config);
NoiseModel resolve_noise(const RunConfig& config);
ScanConditions resolve_scan_conditions(const RunConfig& config);
std::vector<double> resolve_scan_pressures_pa(const RunConfig& config);
BeamlineConfig resolve_beamline(const RunConfig& config);
CollisionKickModel resolve_kick(const RunConfig& config);
BeamlineRunParams resolve_beamline_params(const RunConfig& config);
std::vector<GasSpecies> resolve_survey_gases(const RunConfig& config);

}  // namespace tlsim
