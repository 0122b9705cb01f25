// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/rng.hpp"

#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"

namespace tlsim {
namespace {

constexpr std::uint32_t kMultiplier0 = 0xD2511F53u;
constexpr std::uint32_t kMultiplier1 = 0xCD9E8D57u;
constexpr std::uint32_t kKeyBump0 = 0x9E3779B9u;  // golden ratio
constexpr std::uint32_t kKeyBump1 = 0xBB67AE85u;  // sqrt(3) - 1

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline std::array<std::uint32_t, 4> round_once(const std::array<std::uint32_t, 4>& x,
                                               const std::array<std::uint32_t, 2>& key) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMultiplier0, x[0], hi0, lo0);
  mulhilo(kMultiplier1, x[2], hi1, lo1);
  return {hi1 ^ x[1] ^ key[0], lo1, hi0 ^ x[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(const std::array<std::uint32_t, 4>& counter,
                                               const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> x = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kKeyBump0;
      k[1] += kKeyBump1;
    }
    x = round_once(x, k);
  }
  return x;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void RngStream::refill() {
  const std::array<std::uint32_t, 4> counter{
      static_cast<std::uint32_t>(block_index_), static_cast<std::uint32_t>(block_index_ >> 32),
      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
  buffer_ = Philox4x32::block(counter, key_);
  ++block_index_;
  buffer_pos_ = 0;
}

std::uint32_t RngStream::next_u32() {
  if (buffer_pos_ >= 4) refill();
  return buffer_[buffer_pos_++];
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log1p(-u1));
  const double angle = 2.0 * constants::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

double RngStream::exponential() { return -std::log1p(-uniform()); }

std::uint64_t RngStream::poisson(double mean) {
  if (!(mean >= 0.0)) throw validity_error("Poisson mean must be non-negative");
  if (mean == 0.0) return 0;
  // Halve large means so exp(-mean) stays representable.
  std::uint64_t extra = 0;
  while (mean > 500.0) {
    mean *= 0.5;
    extra += poisson(mean);
  }
  const double threshold = std::exp(-mean);
  std::uint64_t count = 0;
  double product = 1.0;
  for (;;) {
    product *= uniform();
    if (product <= threshold) break;
    ++count;
  }
  return extra + count;
}

}  // namespace tlsim
