// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/output.hpp"
#include "tlsim/units.hpp"

namespace tlsim {
namespace {

std::string trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

double parse_double_value(const std::string& raw) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(raw.c_str(), &end);
  if (end != raw.c_str() + raw.size() || raw.empty() || errno == ERANGE) {
    throw config_error("expected a number, got '" + raw + "'");
  }
  return value;
}

long long parse_int_value(const std::string& raw) {
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(raw.c_str(), &end, 10);
  if (end != raw.c_str() + raw.size() || raw.empty() || errno == ERANGE) {
    throw config_error("expected an integer, got '" + raw + "'");
  }
  return value;
}

std::uint64_t parse_uint_value(const std::string& raw) {
  // strtoull silently wraps negative input, so reject the sign up front.
  if (!raw.empty() && raw.front() == '-') {
    throw config_error("expected a non-negative integer, got '" + raw + "'");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw.c_str(), &end, 10);
  if (end != raw.c_str() + raw.size() || raw.empty() || errno == ERANGE) {
    throw config_error("expected an integer, got '" + raw + "'");
  }
  return value;
}

bool parse_bool_value(const std::string& raw) {
  if (raw == "true") return true;
  if (raw == "false") return false;
  throw config_error("expected 'true' or 'false', got '" + raw + "'");
}

// Half-open/closed interval constraint on numeric keys.
struct Range {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_strict = false;
  bool hi_strict = false;

  bool contains(double v) const {
    if (lo_strict ? v <= lo : v < lo) return false;
    if (hi_strict ? v >= hi : v > hi) return false;
    return true;
  }

  std::string describe() const {
    std::string text = lo_strict ? "(" : "[";
    text += format_g17(lo);
    text += ", ";
    text += format_g17(hi);
    text += hi_strict ? ")" : "]";
    return text;
  }
};

Range positive() { return {0.0, std::numeric_limits<double>::infinity(), true, false}; }
Range non_negative() { return {0.0, std::numeric_limits<double>::infinity(), false, false}; }

struct KeyEntry {
  std::string section;
  std::string key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> serialized;
  std::function<nlohmann::ordered_json(const RunConfig&)> as_json;
};

void check_range(const std::string& key, double value, const Range& range) {
  if (!range.contains(value)) {
    throw config_error("value " + format_g17(value) + " for '" + key + "' is outside " +
                       range.describe());
  }
}

template <class Accessor>  // Accessor: RunConfig& -> double&
KeyEntry double_key(std::string section, std::string key, Accessor access, Range range) {
  return KeyEntry{
      section, key,
      [access, range, key](RunConfig& config, const std::string& raw) {
        const double value = parse_double_value(raw);
        check_range(key, value, range);
        access(config) = value;
      },
      [access](const RunConfig& config) {
        return format_g17(access(const_cast<RunConfig&>(config)));
      },
      [access](const RunConfig& config) {
        return nlohmann::ordered_json(access(const_cast<RunConfig&>(config)));
      }};
}

template <class Accessor>  // Accessor: RunConfig& -> int&
KeyEntry int_key(std::string section, std::string key, Accessor access, long long lo,
                 long long hi) {
  return KeyEntry{
      section, key,
      [access, lo, hi, key](RunConfig& config, const std::string& raw) {
        const long long value = parse_int_value(raw);
        if (value < lo || value > hi) {
          throw config_error("value " + std::to_string(value) + " for '" + key +
                             "' is outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "]");
        }
        access(config) = static_cast<int>(value);
      },
      [access](const RunConfig& config) {
        return std::to_string(access(const_cast<RunConfig&>(config)));
      },
      [access](const RunConfig& config) {
        return nlohmann::ordered_json(access(const_cast<RunConfig&>(config)));
      }};
}

template <class Accessor>  // Accessor: RunConfig& -> std::uint64_t&
KeyEntry uint_key(std::string section, std::string key, Accessor access, std::uint64_t lo) {
  return KeyEntry{
      section, key,
      [access, lo, key](RunConfig& config, const std::string& raw) {
        const std::uint64_t value = parse_uint_value(raw);
        if (value < lo) {
          throw config_error("value " + std::to_string(value) + " for '" + key +
                             "' must be at least " + std::to_string(lo));
        }
        access(config) = value;
      },
      [access](const RunConfig& config) {
        return std::to_string(access(const_cast<RunConfig&>(config)));
      },
      [access](const RunConfig& config) {
        return nlohmann::ordered_json(access(const_cast<RunConfig&>(config)));
      }};
}

template <class Accessor>  // Accessor: RunConfig& -> bool&
KeyEntry bool_key(std::string section, std::string key, Accessor access) {
  return KeyEntry{
      section, key,
      [access](RunConfig& config, const std::string& raw) {
        access(config) = parse_bool_value(raw);
      },
      [access](const RunConfig& config) {
        return access(const_cast<RunConfig&>(config)) ? std::string("true")
                                                      : std::string("false");
      },
      [access](const RunConfig& config) {
        return nlohmann::ordered_json(access(const_cast<RunConfig&>(config)));
      }};
}

template <class Accessor>  // Accessor: RunConfig& -> std::string&
KeyEntry string_key(std::string section, std::string key, Accessor access,
                    std::vector<std::string> allowed = {}) {
  return KeyEntry{
      section, key,
      [access, allowed = std::move(allowed), key](RunConfig& config, const std::string& raw) {
        if (raw.empty()) throw config_error("'" + key + "' must be non-empty");
        if (!allowed.empty() &&
            std::find(allowed.begin(), allowed.end(), raw) == allowed.end()) {
          std::string options;
          for (const std::string& option : allowed) {
            if (!options.empty()) options += " | ";
            options += option;
          }
          throw config_error("'" + raw + "' is not a valid value for '" + key +
                             "' (expected " + options + ")");
        }
        access(config) = raw;
      },
      [access](const RunConfig& config) { return access(const_cast<RunConfig&>(config)); },
      [access](const RunConfig& config) {
        return nlohmann::ordered_json(access(const_cast<RunConfig&>(config)));
      }};
}

const std::vector<std::string>& section_order() {
  static const std::vector<std::string> sections = {
      "molecule", "gas",      "environment", "beam",   "interferometer", "scattering",
      "quadrature", "scan",   "beamline",    "eta",    "survey",         "extrapolate",
      "run"};
  return sections;
}

const std::vector<KeyEntry>& key_table() {
  static const std::vector<KeyEntry> table = [] {
    std::vector<KeyEntry> t;
    t.push_back(string_key("molecule", "name",
                           [](RunConfig& c) -> std::string& { return c.molecule.name; }));
    t.push_back(double_key("molecule", "mass_amu",
                           [](RunConfig& c) -> double& { return c.molecule.mass_amu; },
                           positive()));

    t.push_back(
        string_key("gas", "name", [](RunConfig& c) -> std::string& { return c.gas.name; }));
    t.push_back(double_key("gas", "mass_amu",
                           [](RunConfig& c) -> double& { return c.gas.mass_amu; },
                           non_negative()));
    t.push_back(double_key("gas", "c6_mev_nm6",
                           [](RunConfig& c) -> double& { return c.gas.c6_mev_nm6; },
                           non_negative()));

    t.push_back(double_key("environment", "temperature_k",
                           [](RunConfig& c) -> double& { return c.environment.temperature_k; },
                           positive()));
    t.push_back(double_key("environment", "pressure_mbar",
                           [](RunConfig& c) -> double& { return c.environment.pressure_mbar; },
                           non_negative()));

    t.push_back(double_key("beam", "speed_mps",
                           [](RunConfig& c) -> double& { return c.beam.speed_mps; }, positive()));

    t.push_back(double_key("interferometer", "period_nm",
                           [](RunConfig& c) -> double& { return c.interferometer.period_nm; },
                           positive()));
    t.push_back(double_key("interferometer", "slit_width_nm",
                           [](RunConfig& c) -> double& { return c.interferometer.slit_width_nm; },
                           positive()));
    t.push_back(double_key("interferometer", "spacing_m",
                           [](RunConfig& c) -> double& { return c.interferometer.spacing_m; },
                           positive()));
    t.push_back(double_key("interferometer", "phase_parameter",
                           [](RunConfig& c) -> double& { return c.interferometer.phase_parameter; },
                           non_negative()));
    t.push_back(int_key("interferometer", "lmax",
                        [](RunConfig& c) -> int& { return c.interferometer.lmax; }, 1, 64));

    t.push_back(string_key("scattering", "model",
                           [](RunConfig& c) -> std::string& { return c.scattering.model; },
                           {"complete", "isotropic", "forward_peaked"}));
    t.push_back(double_key("scattering", "anisotropy_g",
                           [](RunConfig& c) -> double& { return c.scattering.anisotropy_g; },
                           Range{0.0, 1.0, false, true}));

    t.push_back(double_key("quadrature", "rel_tol",
                           [](RunConfig& c) -> double& { return c.quadrature.rel_tol; },
                           Range{0.0, 0.1, true, false}));
    t.push_back(double_key("quadrature", "abs_tol",
                           [](RunConfig& c) -> double& { return c.quadrature.abs_tol; },
                           non_negative()));

    t.push_back(string_key("scan", "mode",
                           [](RunConfig& c) -> std::string& { return c.scan.mode; },
                           {"analytic", "beamline"}));
    t.push_back(double_key("scan", "pressure_min_mbar",
                           [](RunConfig& c) -> double& { return c.scan.pressure_min_mbar; },
                           positive()));
    t.push_back(double_key("scan", "pressure_max_mbar",
                           [](RunConfig& c) -> double& { return c.scan.pressure_max_mbar; },
                           positive()));
    t.push_back(
        int_key("scan", "points", [](RunConfig& c) -> int& { return c.scan.points; }, 2, 10000));
    t.push_back(bool_key("scan", "include_vacuum",
                         [](RunConfig& c) -> bool& { return c.scan.include_vacuum; }));
    t.push_back(bool_key("scan", "shot_noise",
                         [](RunConfig& c) -> bool& { return c.scan.shot_noise; }));
    t.push_back(double_key("scan", "mean_counts",
                           [](RunConfig& c) -> double& { return c.scan.mean_counts; },
                           positive()));
    t.push_back(int_key("scan", "fringe_positions",
                        [](RunConfig& c) -> int& { return c.scan.fringe_positions; }, 8, 65536));
    t.push_back(double_key("scan", "contrast_floor",
                           [](RunConfig& c) -> double& { return c.scan.contrast_floor; },
                           Range{0.0, 1.0, true, false}));
    t.push_back(double_key("scan", "gaussian_rel_noise",
                           [](RunConfig& c) -> double& { return c.scan.gaussian_rel_noise; },
                           non_negative()));

    t.push_back(uint_key("beamline", "samples",
                         [](RunConfig& c) -> std::uint64_t& { return c.beamline.samples; }, 1));
    t.push_back(double_key("beamline", "total_length_m",
                           [](RunConfig& c) -> double& { return c.beamline.total_length_m; },
                           positive()));
    t.push_back(double_key("beamline", "design_speed_mps",
                           [](RunConfig& c) -> double& { return c.beamline.design_speed_mps; },
                           positive()));
    t.push_back(double_key("beamline", "source_height_um",
                           [](RunConfig& c) -> double& { return c.beamline.source_height_um; },
                           positive()));
    t.push_back(double_key("beamline", "mid_height_um",
                           [](RunConfig& c) -> double& { return c.beamline.mid_height_um; },
                           positive()));
    t.push_back(double_key("beamline", "detector_height_um",
                           [](RunConfig& c) -> double& { return c.beamline.detector_height_um; },
                           positive()));
    t.push_back(double_key("beamline", "oven_temperature_k",
                           [](RunConfig& c) -> double& { return c.beamline.oven_temperature_k; },
                           positive()));
    t.push_back(string_key("beamline", "kick_model",
                           [](RunConfig& c) -> std::string& { return c.beamline.kick_model; },
                           {"isotropic", "forward_peaked"}));
    t.push_back(double_key("beamline", "kick_anisotropy_g",
                           [](RunConfig& c) -> double& { return c.beamline.kick_anisotropy_g; },
                           Range{0.0, 1.0, false, true}));
    t.push_back(double_key("beamline", "histogram_min_mps",
                           [](RunConfig& c) -> double& { return c.beamline.histogram_min_mps; },
                           positive()));
    t.push_back(double_key("beamline", "histogram_max_mps",
                           [](RunConfig& c) -> double& { return c.beamline.histogram_max_mps; },
                           positive()));
    t.push_back(int_key("beamline", "histogram_bins",
                        [](RunConfig& c) -> int& { return c.beamline.histogram_bins; }, 2,
                        100000));

    t.push_back(double_key("eta", "delta_r_min_m",
                           [](RunConfig& c) -> double& { return c.eta.delta_r_min_m; },
                           positive()));
    t.push_back(double_key("eta", "delta_r_max_m",
                           [](RunConfig& c) -> double& { return c.eta.delta_r_max_m; },
                           positive()));
    t.push_back(
        int_key("eta", "points", [](RunConfig& c) -> int& { return c.eta.points; }, 2, 100000));

    t.push_back(string_key("survey", "gases",
                           [](RunConfig& c) -> std::string& { return c.survey.gases; }));
    t.push_back(double_key("survey", "mean_counts",
                           [](RunConfig& c) -> double& { return c.survey.mean_counts; },
                           positive()));

    t.push_back(double_key("extrapolate", "mass_amu",
                           [](RunConfig& c) -> double& { return c.extrapolate.mass_amu; },
                           positive()));
    t.push_back(double_key("extrapolate", "speed_mps",
                           [](RunConfig& c) -> double& { return c.extrapolate.speed_mps; },
                           positive()));
    t.push_back(double_key("extrapolate", "length_m",
                           [](RunConfig& c) -> double& { return c.extrapolate.length_m; },
                           positive()));
    t.push_back(double_key("extrapolate", "temperature_k",
                           [](RunConfig& c) -> double& { return c.extrapolate.temperature_k; },
                           positive()));

    t.push_back(uint_key("run", "seed",
                         [](RunConfig& c) -> std::uint64_t& { return c.run.seed; }, 0));
    t.push_back(string_key("run", "out_dir",
                           [](RunConfig& c) -> std::string& { return c.run.out_dir; }));
    return t;
  }();
  return table;
}

const KeyEntry* find_entry(std::string_view section, std::string_view key) {
  for (const KeyEntry& entry : key_table()) {
    if (entry.section == section && entry.key == key) return &entry;
  }
  return nullptr;
}

bool known_section(std::string_view section) {
  const auto& sections = section_order();
  return std::find(sections.begin(), sections.end(), section) != sections.end();
}

// "period_nm" -> "period": the stem a unit suffix hangs off.
std::string_view key_stem(std::string_view key) {
  const auto pos = key.rfind('_');
  return pos == std::string_view::npos ? key : key.substr(0, pos);
}

[[noreturn]] void fail_at(std::string_view origin, int line, const std::string& message) {
  throw config_error(std::string(origin) + ":" + std::to_string(line) + ": " + message);
}

const GasSpecies* lookup_gas(std::string_view name) {
  for (const GasSpecies& gas : gas_table()) {
    if (gas.name == name) return &gas;
  }
  return nullptr;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
  RunConfig config;
  std::string section;
  std::set<std::pair<std::string, std::string>> seen;

  int line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const auto newline = text.find('\n', cursor);
    std::string_view raw_line =
        text.substr(cursor, newline == std::string_view::npos ? text.size() - cursor
                                                              : newline - cursor);
    cursor = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_no;

    const auto comment = raw_line.find_first_of("#;");
    if (comment != std::string_view::npos) raw_line = raw_line.substr(0, comment);
    const std::string line = trim(raw_line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail_at(origin, line_no, "unterminated section header");
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!known_section(name)) fail_at(origin, line_no, "unknown section '[" + name + "]'");
      section = name;
      continue;
    }

    const auto equals = line.find('=');
    if (equals == std::string::npos) fail_at(origin, line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, equals));
    const std::string value = trim(std::string_view(line).substr(equals + 1));
    if (key.empty()) fail_at(origin, line_no, "empty key");
    if (section.empty()) {
      fail_at(origin, line_no, "key '" + key + "' appears before any [section] header");
    }

    const KeyEntry* entry = find_entry(section, key);
    if (entry == nullptr) {
      // A matching stem means the user wrote the right quantity with the
      // wrong unit suffix; say so instead of a generic unknown-key error.
      for (const KeyEntry& candidate : key_table()) {
        if (candidate.section == section && candidate.key != key &&
            key_stem(candidate.key) == key_stem(key)) {
          fail_at(origin, line_no,
                  "unit suffix mismatch for key '" + section + "." + key + "'; expected '" +
                      candidate.key + "'");
        }
      }
      fail_at(origin, line_no, "unknown key '" + section + "." + key + "'");
    }
    if (!seen.insert({section, key}).second) {
      fail_at(origin, line_no, "duplicate key '" + section + "." + key + "'");
    }

    try {
      entry->set(config, value);
    } catch (const config_error& error) {
      fail_at(origin, line_no, error.what());
    }
  }

  try {
    validate(config);
  } catch (const config_error& error) {
    throw config_error(std::string(origin) + ": " + error.what());
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config_text(buffer.str(), path);
}

void validate(const RunConfig& config) {
  if (config.interferometer.slit_width_nm >= config.interferometer.period_nm) {
    throw config_error("interferometer.slit_width_nm must be smaller than period_nm");
  }
  if (config.scan.pressure_max_mbar <= config.scan.pressure_min_mbar) {
    throw config_error("scan.pressure_max_mbar must exceed scan.pressure_min_mbar");
  }
  if (config.beamline.histogram_max_mps <= config.beamline.histogram_min_mps) {
    throw config_error("beamline.histogram_max_mps must exceed beamline.histogram_min_mps");
  }
  if (config.eta.delta_r_max_m <= config.eta.delta_r_min_m) {
    throw config_error("eta.delta_r_max_m must exceed eta.delta_r_min_m");
  }
  resolve_gas(config);           // table lookup / override completeness
  resolve_survey_gases(config);  // every listed gas must be tabulated
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  bool first = true;
  for (const std::string& section : section_order()) {
    if (!first) out += '\n';
    first = false;
    out += '[' + section + "]\n";
    for (const KeyEntry& entry : key_table()) {
      if (entry.section != section) continue;
      out += entry.key + " = " + entry.serialized(config) + "\n";
    }
  }
  return out;
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
  nlohmann::ordered_json document;
  for (const std::string& section : section_order()) {
    nlohmann::ordered_json block;
    for (const KeyEntry& entry : key_table()) {
      if (entry.section != section) continue;
      block[entry.key] = entry.as_json(config);
    }
    document[section] = std::move(block);
  }
  return document;
}

MoleculeSpecies resolve_molecule(const RunConfig& config) {
  return MoleculeSpecies{config.molecule.name, config.molecule.mass_amu};
}

GasSpecies resolve_gas(const RunConfig& config) {
  const GasSpecies* tabulated = lookup_gas(config.gas.name);
  GasSpecies gas = tabulated ? *tabulated : GasSpecies{config.gas.name, 0.0, 0.0};
  if (config.gas.mass_amu > 0.0) gas.mass_amu = config.gas.mass_amu;
  if (config.gas.c6_mev_nm6 > 0.0) gas.c6_mev_nm6 = config.gas.c6_mev_nm6;
  if (gas.mass_amu <= 0.0 || gas.c6_mev_nm6 <= 0.0) {
    throw config_error("gas '" + config.gas.name +
                       "' is not tabulated; set gas.mass_amu and gas.c6_mev_nm6");
  }
  return gas;
}

ThermalGasState resolve_gas_state(const RunConfig& config) {
  return make_gas_state(resolve_gas(config), config.environment.temperature_k,
                        units::mbar_to_pascal(config.environment.pressure_mbar));
}

InterferometerGeometry resolve_geometry(const RunConfig& config) {
  InterferometerGeometry geometry;
  geometry.grating.period_m = units::nm_to_m(config.interferometer.period_nm);
  geometry.grating.slit_width_m = units::nm_to_m(config.interferometer.slit_width_nm);
  geometry.grating.phase_parameter = config.interferometer.phase_parameter;
  geometry.spacing_m = config.interferometer.spacing_m;
  geometry.lmax = config.interferometer.lmax;
  validate(geometry);
  return geometry;
}

ScatteringModel resolve_scattering(const RunConfig& config) {
  if (config.scattering.model == "complete") return ScatteringModel::complete();
  if (config.scattering.model == "isotropic") return ScatteringModel::isotropic();
  return ScatteringModel::forward_peaked(config.scattering.anisotropy_g);
}

AccuracySpec resolve_accuracy(const RunConfig& config) {
  AccuracySpec acc;
  acc.rel_tol = config.quadrature.rel_tol;
  acc.abs_tol = config.quadrature.abs_tol;
  return acc;
}

NoiseModel resolve_noise(const RunConfig& config) {
  NoiseModel noise;
  noise.shot_noise = config.scan.shot_noise;
  noise.mean_counts = config.scan.mean_counts;
  noise.fringe_positions = config.scan.fringe_positions;
  noise.contrast_floor = config.scan.contrast_floor;
  noise.gaussian_rel = config.scan.gaussian_rel_noise;
  validate(noise);
  return noise;
}

ScanConditions resolve_scan_conditions(const RunConfig& config) {
  ScanConditions conditions;
  conditions.geometry = resolve_geometry(config);
  conditions.molecule = resolve_molecule(config);
  conditions.beam_speed_mps = config.beam.speed_mps;
  conditions.gas = resolve_gas(config);
  conditions.temperature_k = config.environment.temperature_k;
  conditions.decoherence = resolve_scattering(config);
  conditions.noise = resolve_noise(config);
  conditions.accuracy = resolve_accuracy(config);
  return conditions;
}

std::vector<double> resolve_scan_pressures_pa(const RunConfig& config) {
  return pressure_grid(units::mbar_to_pascal(config.scan.pressure_min_mbar),
                       units::mbar_to_pascal(config.scan.pressure_max_mbar), config.scan.points,
                       config.scan.include_vacuum);
}

BeamlineConfig resolve_beamline(const RunConfig& config) {
  BeamlineConfig beamline = make_aligned_beamline(
      config.beamline.total_length_m, config.beamline.design_speed_mps,
      units::um_to_m(config.beamline.source_height_um), units::um_to_m(config.beamline.mid_height_um),
      units::um_to_m(config.beamline.detector_height_um), config.beamline.oven_temperature_k,
      constants::standard_gravity);
  beamline.molecule = resolve_molecule(config);
  return beamline;
}

CollisionKickModel resolve_kick(const RunConfig& config) {
  CollisionKickModel kick;
  kick.kind = config.beamline.kick_model == "isotropic" ? ScatteringKind::Isotropic
                                                        : ScatteringKind::ForwardPeaked;
  kick.anisotropy = config.beamline.kick_anisotropy_g;
  return kick;
}

BeamlineRunParams resolve_beamline_params(const RunConfig& config) {
  BeamlineRunParams params;
  params.samples = config.beamline.samples;
  params.histogram_min_mps = config.beamline.histogram_min_mps;
  params.histogram_max_mps = config.beamline.histogram_max_mps;
  params.histogram_bins = config.beamline.histogram_bins;
  return params;
}

std::vector<GasSpecies> resolve_survey_gases(const RunConfig& config) {
  std::vector<GasSpecies> gases;
  std::string_view remaining = config.survey.gases;
  while (!remaining.empty()) {
    const auto comma = remaining.find(',');
    const std::string name = trim(remaining.substr(0, comma));
    remaining = comma == std::string_view::npos ? std::string_view{}
                                                : remaining.substr(comma + 1);
    if (name.empty()) continue;
    gases.push_back(find_gas(name));  // throws config_error for unknown names
  }
  if (gases.empty()) throw config_error("survey.gases lists no gases");
  return gases;
}

}  // namespace tlsim
