// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tlsim/beamline.hpp"
#include "tlsim/experiment.hpp"

namespace tlsim {

// Shortest text that still round-trips the exact double (at most 17
// significant digits, %g-style notation).
std::string format_g17(double value);

// Version of the result-envelope layout below; bumped on breaking changes.
inline constexpr int kResultSchemaVersion = 1;

// Wrapper around every JSON result: what produced it (command, seed, full
// config echo) plus the command-specific payload. Everything inside is a
// function of (config, seed) alone — never of thread count or wall clock —
// so repeated runs are byte-identical. The timestamp stays empty unless
// explicitly requested.
struct ResultEnvelope {
  std::string command;
  std::uint64_t seed = 0;
  std::string timestamp;
  nlohmann::ordered_json config;
  nlohmann::ordered_json payload;
};

nlohmann::ordered_json envelope_to_json(const ResultEnvelope& envelope);

// Pretty-printed JSON document, trailing newline included.
std::string envelope_text(const ResultEnvelope& envelope);

// Checks a parsed document against the envelope layout (the same shape the
// shipped schemas/result_envelope.schema.json describes): required fields,
// types, non-empty command. Throws validity_error on the first violation.
void check_envelope_json(const nlohmann::json& document);

// CSV writers. Fixed headers, one row per record, numbers via format_g17,
// '\n' line endings.

// pressure_mbar,visibility,visibility_err
std::string pressure_scan_csv(const PressureScan& scan);

// gas,p0_pred_mbar,p0_fit_mbar,ratio
std::string survey_csv(std::span<const SurveyRow> rows);

// delta_r_m,eta
std::string eta_profile_csv(std::span<const double> delta_r_m, std::span<const double> eta);

// v_low_mps,v_high_mps,weight
std::string speed_histogram_csv(const DetectedDistribution& distribution);

// Writes text to `path` (parent directory must exist); config_error on
// failure to open or write.
void write_text_file(const std::string& path, std::string_view text);

}  // namespace tlsim
