// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: visibility, pressure-scan, gas-survey, beamline,
// eta-profile and extrapolate subcommands over a shared INI configuration.
// Every run writes a JSON result envelope (and a CSV table where the result
// is tabular) into the output directory; outputs depend only on the
// configuration and the seed, never on thread count or wall clock.

#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tlsim/collisions.hpp"
#include "tlsim/config.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/output.hpp"
#include "tlsim/units.hpp"

namespace {

using tlsim::RunConfig;

struct CommonArgs {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 1;
  std::string out_dir;
  bool out_dir_given = false;
  bool stamp = false;
};

void add_common_options(CLI::App* sub, CommonArgs& args) {
  sub->add_option("config", args.config_path, "configuration file (INI; defaults when omitted)")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", args.seed, "random seed (overrides run.seed)")
      ->each([&args](const std::string&) { args.seed_given = true; });
  sub->add_option("--threads", args.threads, "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 1024));
  sub->add_option("--out-dir", args.out_dir, "output directory (overrides run.out_dir)")
      ->each([&args](const std::string&) { args.out_dir_given = true; });
  sub->add_flag("--stamp", args.stamp, "record the wall-clock time in the result envelope");
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

struct RunContext {
  RunConfig config;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out_dir;
  std::string timestamp;
};

RunContext make_context(const CommonArgs& args) {
  RunContext ctx;
  ctx.config = args.config_path.empty() ? RunConfig{} : tlsim::load_config_file(args.config_path);
  ctx.seed = args.seed_given ? args.seed : ctx.config.run.seed;
  ctx.threads = args.threads > 0
                    ? args.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  ctx.out_dir = args.out_dir_given ? args.out_dir : ctx.config.run.out_dir;
  if (args.stamp) ctx.timestamp = utc_timestamp();
  return ctx;
}

void write_result(const RunContext& ctx, const std::string& command,
                  const nlohmann::ordered_json& payload,
                  const std::optional<std::pair<std::string, std::string>>& csv) {
  std::error_code ec;
  std::filesystem::create_directories(ctx.out_dir, ec);
  if (ec) throw tlsim::config_error("cannot create output directory '" + ctx.out_dir + "'");

  tlsim::ResultEnvelope envelope;
  envelope.command = command;
  envelope.seed = ctx.seed;
  envelope.timestamp = ctx.timestamp;
  envelope.config = tlsim::config_to_json(ctx.config);
  envelope.payload = payload;

  std::string stem = command;
  for (char& c : stem) {
    if (c == '-') c = '_';
  }
  tlsim::write_text_file(ctx.out_dir + "/" + stem + ".json", tlsim::envelope_text(envelope));
  if (csv) tlsim::write_text_file(ctx.out_dir + "/" + csv->first, csv->second);
}

nlohmann::ordered_json coefficients_json(const tlsim::FourierSpectrum& spectrum) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (int l = 0; l <= spectrum.lmax(); ++l) {
    nlohmann::ordered_json entry;
    entry["l"] = l;
    entry["re"] = spectrum.at(l).real();
    entry["im"] = spectrum.at(l).imag();
    list.push_back(std::move(entry));
  }
  return list;
}

nlohmann::ordered_json fit_json(const tlsim::ExponentialFit& fit) {
  nlohmann::ordered_json out;
  out["v0"] = fit.v0;
  out["v0_err"] = fit.v0_err;
  out["p0_mbar"] = tlsim::units::pascal_to_mbar(fit.p0);
  out["p0_err_mbar"] = tlsim::units::pascal_to_mbar(fit.p0_err);
  out["residual_norm"] = fit.residual_norm;
  out["points_used"] = fit.points_used;
  out["points_excluded"] = fit.points_excluded;
  return out;
}

int run_visibility(const RunContext& ctx) {
  const auto geometry = tlsim::resolve_geometry(ctx.config);
  const auto molecule = tlsim::resolve_molecule(ctx.config);
  const auto acc = tlsim::resolve_accuracy(ctx.config);
  const double speed = ctx.config.beam.speed_mps;
  const double wavelength = tlsim::de_broglie_wavelength(molecule.mass_kg(), speed);

  const auto spectrum = tlsim::talbot_lau_spectrum(geometry, wavelength, acc);
  const double vacuum_visibility = tlsim::visibility(spectrum);
  const double classical_visibility = tlsim::visibility(tlsim::shadow_spectrum(geometry));

  nlohmann::ordered_json payload;
  payload["molecule"] = molecule.name;
  payload["beam_speed_mps"] = speed;
  payload["wavelength_m"] = wavelength;
  payload["self_imaging_length_m"] =
      tlsim::talbot_length(geometry.grating.period_m, wavelength);
  payload["vacuum_visibility"] = vacuum_visibility;
  payload["classical_visibility"] = classical_visibility;
  payload["coefficients"] = coefficients_json(spectrum);

  if (ctx.config.environment.pressure_mbar > 0.0) {
    const auto gas_state = tlsim::resolve_gas_state(ctx.config);
    const auto model = tlsim::resolve_scattering(ctx.config);
    const auto damped = tlsim::decohered_spectrum(spectrum, gas_state, speed,
                                                  geometry.spacing_m, model, acc);
    payload["pressure_mbar"] = ctx.config.environment.pressure_mbar;
    payload["damped_visibility"] = tlsim::visibility(damped);
    payload["decay_pressure_mbar"] = tlsim::units::pascal_to_mbar(tlsim::decoherence_pressure(
        gas_state.gas, speed, gas_state.temperature_k, geometry.spacing_m));
  }

  write_result(ctx, "visibility", payload, std::nullopt);
  std::cout << "vacuum visibility " << tlsim::format_g17(vacuum_visibility) << " at "
            << tlsim::format_g17(speed) << " m/s\n";
  return 0;
}

int run_pressure_scan(const RunContext& ctx) {
  auto conditions = tlsim::resolve_scan_conditions(ctx.config);
  const auto pressures = tlsim::resolve_scan_pressures_pa(ctx.config);

  tlsim::PressureScan scan;
  if (ctx.config.scan.mode == "beamline") {
    tlsim::BeamlineScanConditions full;
    full.base = conditions;
    full.beamline = tlsim::resolve_beamline(ctx.config);
    full.kick = tlsim::resolve_kick(ctx.config);
    full.run = tlsim::resolve_beamline_params(ctx.config);
    full.run.threads = ctx.threads;
    scan = tlsim::simulate_beamline_scan(full, pressures, ctx.seed);
  } else {
    scan = tlsim::simulate_pressure_scan(conditions, pressures, ctx.seed);
  }
  const auto fit = tlsim::fit_scan(scan);

  nlohmann::ordered_json payload;
  payload["mode"] = ctx.config.scan.mode;
  payload["gas"] = conditions.gas.name;
  payload["vacuum_visibility"] = scan.vacuum_visibility;
  payload["predicted_p0_mbar"] =
      tlsim::units::pascal_to_mbar(scan.predicted_decay_pressure_pa);
  payload["fit"] = fit_json(fit);
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& point : scan.points) {
    nlohmann::ordered_json entry;
    entry["pressure_mbar"] = tlsim::units::pascal_to_mbar(point.pressure_pa);
    entry["visibility"] = point.visibility;
    entry["visibility_err"] = point.sigma;
    points.push_back(std::move(entry));
  }
  payload["points"] = std::move(points);

  write_result(ctx, "pressure-scan", payload,
               std::make_pair(std::string("pressure_scan.csv"), tlsim::pressure_scan_csv(scan)));
  std::cout << "fitted decay pressure "
            << tlsim::format_g17(tlsim::units::pascal_to_mbar(fit.p0)) << " mbar (predicted "
            << tlsim::format_g17(tlsim::units::pascal_to_mbar(scan.predicted_decay_pressure_pa))
            << " mbar)\n";
  return 0;
}

int run_gas_survey(const RunContext& ctx) {
  auto conditions = tlsim::resolve_scan_conditions(ctx.config);
  conditions.noise.shot_noise = true;
  conditions.noise.mean_counts = ctx.config.survey.mean_counts;
  const auto gases = tlsim::resolve_survey_gases(ctx.config);
  const auto pressures = tlsim::resolve_scan_pressures_pa(ctx.config);

  const auto rows = tlsim::gas_survey(conditions, gases, pressures, ctx.seed);

  nlohmann::ordered_json payload;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json entry;
    entry["gas"] = row.gas.name;
    entry["p0_pred_mbar"] = tlsim::units::pascal_to_mbar(row.p0_predicted_pa);
    entry["p0_fit_mbar"] = tlsim::units::pascal_to_mbar(row.p0_fitted_pa);
    entry["ratio"] = row.ratio;
    list.push_back(std::move(entry));
  }
  payload["rows"] = std::move(list);

  write_result(ctx, "gas-survey", payload,
               std::make_pair(std::string("gas_survey.csv"), tlsim::survey_csv(rows)));
  std::cout << "surveyed " << rows.size() << " gases\n";
  return 0;
}

int run_beamline(const RunContext& ctx) {
  const auto beamline = tlsim::resolve_beamline(ctx.config);
  tlsim::TransportConditions transport;
  transport.gas = tlsim::resolve_gas_state(ctx.config);
  transport.kick = tlsim::resolve_kick(ctx.config);
  auto params = tlsim::resolve_beamline_params(ctx.config);
  params.seed = ctx.seed;
  params.threads = ctx.threads;

  const auto distribution = tlsim::detected_speed_distribution(beamline, transport, params);
  const double mean = distribution.mean_speed();
  const double fwhm = distribution.fwhm();

  nlohmann::ordered_json payload;
  payload["samples"] = distribution.samples;
  payload["survivors"] = distribution.survivors;
  payload["detected_fraction"] = distribution.detected_fraction();
  payload["pressure_mbar"] = ctx.config.environment.pressure_mbar;
  payload["design_speed_mps"] = ctx.config.beamline.design_speed_mps;
  payload["mean_speed_mps"] = mean;
  payload["speed_std_mps"] = std::sqrt(distribution.speed_variance());
  payload["fwhm_mps"] = fwhm;
  payload["fwhm_over_mean"] = fwhm / mean;

  write_result(
      ctx, "beamline", payload,
      std::make_pair(std::string("beamline.csv"), tlsim::speed_histogram_csv(distribution)));
  std::cout << "detected mean speed " << tlsim::format_g17(mean) << " m/s, FWHM/mean "
            << tlsim::format_g17(fwhm / mean) << "\n";
  return 0;
}

int run_eta_profile(const RunContext& ctx) {
  const auto gas = tlsim::resolve_gas(ctx.config);
  const auto model = tlsim::resolve_scattering(ctx.config);
  const auto acc = tlsim::resolve_accuracy(ctx.config);
  const double temperature = ctx.config.environment.temperature_k;
  if (model.kind == tlsim::ScatteringKind::CompleteDecoherence) {
    tlsim::emit_warning(
        "eta-profile with scattering.model = complete is identically zero for delta_r > 0; "
        "use 'isotropic' or 'forward_peaked' to resolve the decay shape");
  }

  const int n = ctx.config.eta.points;
  const double lo = ctx.config.eta.delta_r_min_m;
  const double hi = ctx.config.eta.delta_r_max_m;
  std::vector<double> delta_r(static_cast<std::size_t>(n));
  std::vector<double> eta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    delta_r[static_cast<std::size_t>(i)] =
        lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    eta[static_cast<std::size_t>(i)] = tlsim::coherence_after_collision(
        delta_r[static_cast<std::size_t>(i)], gas, temperature, model, acc);
  }

  nlohmann::ordered_json payload;
  payload["gas"] = gas.name;
  payload["temperature_k"] = temperature;
  payload["model"] = ctx.config.scattering.model;
  payload["anisotropy_g"] = ctx.config.scattering.anisotropy_g;
  payload["delta_r_m"] = delta_r;
  payload["eta"] = eta;

  write_result(ctx, "eta-profile", payload,
               std::make_pair(std::string("eta_profile.csv"),
                              tlsim::eta_profile_csv(delta_r, eta)));
  std::cout << "eta profile over [" << tlsim::format_g17(lo) << ", " << tlsim::format_g17(hi)
            << "] m, " << n << " points\n";
  return 0;
}

int run_extrapolate(const RunContext& ctx, const std::optional<double>& mass_amu,
                    const std::optional<double>& speed_mps, const std::optional<double>& length_m) {
  const double mass = mass_amu.value_or(ctx.config.extrapolate.mass_amu);
  const double speed = speed_mps.value_or(ctx.config.extrapolate.speed_mps);
  const double length = length_m.value_or(ctx.config.extrapolate.length_m);
  const double temperature = ctx.config.extrapolate.temperature_k;

  const auto requirement =
      tlsim::extrapolate_vacuum_requirement(mass, speed, length, temperature);
  const double p0_mbar = tlsim::units::pascal_to_mbar(requirement.decay_pressure_pa);

  nlohmann::ordered_json payload;
  payload["mass_amu"] = requirement.mass_amu;
  payload["beam_speed_mps"] = requirement.beam_speed_mps;
  payload["spacing_m"] = requirement.spacing_m;
  payload["temperature_k"] = requirement.temperature_k;
  payload["c6_mev_nm6"] = requirement.c6_mev_nm6;
  payload["sigma_eff_m2"] = requirement.sigma_eff_m2;
  payload["decay_pressure_mbar"] = p0_mbar;
  // The machine-independent figure of merit: decay pressure scaled by L / v.
  payload["p0_L_over_v_mbar_s_per_m"] = p0_mbar * requirement.spacing_m /
                                        requirement.beam_speed_mps;

  write_result(ctx, "extrapolate", payload, std::nullopt);
  std::cout << "decay pressure " << tlsim::format_g17(p0_mbar) << " mbar for "
            << tlsim::format_g17(mass) << " amu at " << tlsim::format_g17(speed) << " m/s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Talbot-Lau matter-wave interferometry: visibility, collisional "
               "decoherence and beam transport simulations"};
  app.require_subcommand(1);

  CommonArgs visibility_args, scan_args, survey_args, beamline_args, eta_args, extra_args;

  CLI::App* visibility = app.add_subcommand(
      "visibility", "vacuum fringe spectrum and visibility for the configured beam");
  add_common_options(visibility, visibility_args);

  CLI::App* scan = app.add_subcommand(
      "pressure-scan", "visibility against residual-gas pressure with exponential fit");
  add_common_options(scan, scan_args);

  CLI::App* survey = app.add_subcommand(
      "gas-survey", "predicted against recovered decay pressure per residual gas");
  add_common_options(survey, survey_args);

  CLI::App* beamline = app.add_subcommand(
      "beamline", "detected speed distribution behind the gravitational velocity selector");
  add_common_options(beamline, beamline_args);

  CLI::App* eta = app.add_subcommand(
      "eta-profile", "single-collision coherence kernel against path separation");
  add_common_options(eta, eta_args);

  CLI::App* extrapolate = app.add_subcommand(
      "extrapolate", "vacuum requirement for a hypothetical heavy slow particle");
  add_common_options(extrapolate, extra_args);
  std::optional<double> extra_mass, extra_speed, extra_length;
  extrapolate->add_option("--mass-amu", extra_mass, "particle mass (amu)")
      ->check(CLI::PositiveNumber);
  extrapolate->add_option("--v-mps", extra_speed, "beam speed (m/s)")
      ->check(CLI::PositiveNumber);
  extrapolate->add_option("--L-m", extra_length, "grating separation (m)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }

  try {
    if (visibility->parsed()) return run_visibility(make_context(visibility_args));
    if (scan->parsed()) return run_pressure_scan(make_context(scan_args));
    if (survey->parsed()) return run_gas_survey(make_context(survey_args));
    if (beamline->parsed()) return run_beamline(make_context(beamline_args));
    if (eta->parsed()) return run_eta_profile(make_context(eta_args));
    if (extrapolate->parsed()) {
      return run_extrapolate(make_context(extra_args), extra_mass, extra_speed, extra_length);
    }
  } catch (const tlsim::config_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const tlsim::empty_result_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const tlsim::error& error) {
    // validity and accuracy problems share the numerical exit code
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
