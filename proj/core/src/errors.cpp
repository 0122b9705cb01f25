// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/errors.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace tlsim {
namespace {

std::mutex warning_mutex;
std::function<void(const std::string&)> warning_handler;

}  // namespace

void emit_warning(const std::string& message) {
  std::lock_guard<std::mutex> lock(warning_mutex);
  if (warning_handler) {
    warning_handler(message);
  } else {
    std::cerr << "warning: " << message << '\n';
  }
}

void set_warning_handler(std::function<void(const std::string&)> handler) {
  std::lock_guard<std::mutex> lock(warning_mutex);
  warning_handler = std::move(handler);
}

}  // namespace tlsim
