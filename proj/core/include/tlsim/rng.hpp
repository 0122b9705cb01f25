// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace tlsim {

// Philox 4x32-10 counter-based generator. A (seed, stream) pair selects an
// independent sequence; the draw index alone determines each value, so
// results are reproducible regardless of thread scheduling.
struct Philox4x32 {
  // One 10-round block: 128-bit counter + 64-bit key -> 128 random bits.
  static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                            const std::array<std::uint32_t, 2>& key);
};

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal (Box-Muller, cached pair member).
  double normal();

  // Exponential with unit mean.
  double exponential();

  // Poisson counts by inversion via uniform products; means above 500 are
  // split recursively so the product never underflows.
  std::uint64_t poisson(double mean);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_ = 0;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;

  void refill();
};

}  // namespace tlsim
