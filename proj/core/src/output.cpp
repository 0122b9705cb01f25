// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/output.hpp"

#include <charconv>
#include <fstream>

#include "tlsim/errors.hpp"
#include "tlsim/units.hpp"

namespace tlsim {

std::string format_g17(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

nlohmann::ordered_json envelope_to_json(const ResultEnvelope& envelope) {
  nlohmann::ordered_json document;
  document["schema_version"] = kResultSchemaVersion;
  document["command"] = envelope.command;
  document["seed"] = envelope.seed;
  document["timestamp"] = envelope.timestamp;
  document["config"] = envelope.config;
  document["payload"] = envelope.payload;
  return document;
}

std::string envelope_text(const ResultEnvelope& envelope) {
  return envelope_to_json(envelope).dump(2) + "\n";
}

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw validity_error(std::string("result envelope: ") + what);
}

}  // namespace

void check_envelope_json(const nlohmann::json& document) {
  require(document.is_object(), "document is not an object");
  for (const char* field :
       {"schema_version", "command", "seed", "timestamp", "config", "payload"}) {
    require(document.contains(field), "missing required field");
  }
  require(document["schema_version"].is_number_integer(), "schema_version must be an integer");
  require(document["schema_version"].get<int>() == kResultSchemaVersion,
          "unsupported schema_version");
  require(document["command"].is_string(), "command must be a string");
  require(!document["command"].get<std::string>().empty(), "command must be non-empty");
  require(document["seed"].is_number_unsigned() || document["seed"].is_number_integer(),
          "seed must be an integer");
  require(document["timestamp"].is_string(), "timestamp must be a string");
  require(document["config"].is_object(), "config must be an object");
  require(document["payload"].is_object(), "payload must be an object");
}

std::string pressure_scan_csv(const PressureScan& scan) {
  std::string out = "pressure_mbar,visibility,visibility_err\n";
  for (const ScanPoint& point : scan.points) {
    out += format_g17(units::pascal_to_mbar(point.pressure_pa));
    out += ',';
    out += format_g17(point.visibility);
    out += ',';
    out += format_g17(point.sigma);
    out += '\n';
  }
  return out;
}

std::string survey_csv(std::span<const SurveyRow> rows) {
  std::string out = "gas,p0_pred_mbar,p0_fit_mbar,ratio\n";
  for (const SurveyRow& row : rows) {
    out += row.gas.name;
    out += ',';
    out += format_g17(units::pascal_to_mbar(row.p0_predicted_pa));
    out += ',';
    out += format_g17(units::pascal_to_mbar(row.p0_fitted_pa));
    out += ',';
    out += format_g17(row.ratio);
    out += '\n';
  }
  return out;
}

std::string eta_profile_csv(std::span<const double> delta_r_m, std::span<const double> eta) {
  if (delta_r_m.size() != eta.size()) {
    throw validity_error("eta_profile_csv: column length mismatch");
  }
  std::string out = "delta_r_m,eta\n";
  for (std::size_t i = 0; i < delta_r_m.size(); ++i) {
    out += format_g17(delta_r_m[i]);
    out += ',';
    out += format_g17(eta[i]);
    out += '\n';
  }
  return out;
}

std::string speed_histogram_csv(const DetectedDistribution& distribution) {
  std::string out = "v_low_mps,v_high_mps,weight\n";
  const double width = distribution.bin_width();
  for (std::size_t i = 0; i < distribution.weights.size(); ++i) {
    const double low = distribution.histogram_min_mps + width * static_cast<double>(i);
    out += format_g17(low);
    out += ',';
    out += format_g17(low + width);
    out += ',';
    out += format_g17(distribution.weights[i]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw config_error("cannot open '" + path + "' for writing");
  stream.write(text.data(), static_cast<std::streamsize>(text.size()));
  stream.flush();
  if (!stream) throw config_error("failed while writing '" + path + "'");
}

}  // namespace tlsim
