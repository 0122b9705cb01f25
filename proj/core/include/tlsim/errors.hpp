// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace tlsim {

// Error taxonomy, mapped to CLI exit codes in tools/: config 1, numerical 2, empty 3.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (config file, CLI arguments).
class config_error : public error {
 public:
  using error::error;
};

// Parameter outside a physical or documented validity domain.
class validity_error : public error {
 public:
  using error::error;
};

// A numerical routine could not reach its requested accuracy.
class accuracy_error : public error {
 public:
  using error::error;
};

// A result set came out empty (zero survivors, no usable fit points).
class empty_result_error : public error {
 public:
  using error::error;
};

// Non-fatal diagnostics (validity warnings) go through here; default prints to stderr.
void emit_warning(const std::string& message);
void set_warning_handler(std::function<void(const std::string&)> handler);

}  // namespace tlsim
