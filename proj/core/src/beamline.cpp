// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/beamline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "tlsim/collisions.hpp"
#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/math.hpp"

namespace tlsim {
namespace {

// Molecules slower than this along the axis (backscattered or nearly stopped)
// are counted as lost; they are far outside any detectable band.
constexpr double kMinAxialSpeed = 5.0;  // m/s

// Samples are reduced in fixed blocks of this size, in block order, so the
// result does not depend on the number of worker threads.
constexpr std::uint64_t kBlockSize = 8192;

// sigma(v) = inverse_coeff / v + linear_coeff * v (see effective_cross_section).
struct CrossSectionCoeffs {
  double inverse_coeff = 0.0;
  double linear_coeff = 0.0;

  double at(double v) const { return inverse_coeff / v + linear_coeff * v; }
};

CrossSectionCoeffs cross_section_coeffs(const GasSpecies& gas, double temperature_k) {
  // Factor the speed dependence out of effective_cross_section by evaluating
  // it at two speeds; keeps the per-sample cost to two divisions.
  const double v_gas = most_probable_speed(gas.mass_kg(), temperature_k);
  const double v_ref = 0.1 * v_gas;  // safely inside the validity domain
  const double s1 = effective_cross_section(gas, v_ref, temperature_k);
  const double s2 = effective_cross_section(gas, 2.0 * v_ref, temperature_k);
  CrossSectionCoeffs coeffs;
  // s1 = a / v + b v at v_ref and 2 v_ref: solve the 2x2 system.
  coeffs.linear_coeff = (2.0 * s2 - s1) / (3.0 * v_ref);
  coeffs.inverse_coeff = (s1 - coeffs.linear_coeff * v_ref) * v_ref;
  return coeffs;
}

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double norm(Vec3 a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }
Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double henyey_greenstein_cos(double g, double u) {
  if (g == 0.0) return 1.0 - 2.0 * u;
  const double frac = (1.0 - g * g) / (1.0 - g + 2.0 * g * u);
  return (1.0 + g * g - frac * frac) / (2.0 * g);
}

// Elastic kick: draw a thermal gas partner, keep the center-of-mass frame
// speed, redirect the relative velocity per the kick model.
Vec3 collide(Vec3 v_mol, double mol_mass, const ThermalGasState& gas,
             const CollisionKickModel& kick, RngStream& rng) {
  const double gas_mass = gas.gas.mass_kg();
  const double sigma_component = std::sqrt(constants::boltzmann * gas.temperature_k / gas_mass);
  const Vec3 v_gas{sigma_component * rng.normal(), sigma_component * rng.normal(),
                   sigma_component * rng.normal()};
  const double total = mol_mass + gas_mass;
  const Vec3 v_cm = (1.0 / total) * (mol_mass * v_mol + gas_mass * v_gas);
  const Vec3 u = v_mol - v_cm;
  const double u_norm = norm(u);
  if (u_norm == 0.0) return v_mol;

  double cos_theta;
  if (kick.kind == ScatteringKind::ForwardPeaked) {
    cos_theta = henyey_greenstein_cos(kick.anisotropy, rng.uniform());
  } else {
    cos_theta = 1.0 - 2.0 * rng.uniform();
  }
  const double phi = 2.0 * constants::pi * rng.uniform();
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));

  const Vec3 axis = (1.0 / u_norm) * u;
  Vec3 e1 = std::abs(axis.x) < 0.9 ? cross(axis, Vec3{1.0, 0.0, 0.0})
                                   : cross(axis, Vec3{0.0, 1.0, 0.0});
  e1 = (1.0 / norm(e1)) * e1;
  const Vec3 e2 = cross(axis, e1);
  const Vec3 direction =
      cos_theta * axis + (sin_theta * std::cos(phi)) * e1 + (sin_theta * std::sin(phi)) * e2;
  return v_cm + u_norm * direction;
}

struct TransportContext {
  const BeamlineConfig* config = nullptr;
  const ThermalGasState* gas = nullptr;  // null disables collisions
  CollisionKickModel kick;
  CrossSectionCoeffs coeffs;
  double number_density = 0.0;
};

// Returns the arrival speed, or -1 if blocked or lost.
double transport_one(const TransportContext& ctx, const LaunchSample& launch, RngStream& rng) {
  const BeamlineConfig& config = *ctx.config;
  const double inv_hyp = 1.0 / std::sqrt(1.0 + square(launch.slope));
  Vec3 v{0.0, launch.speed_mps * launch.slope * inv_hyp, launch.speed_mps * inv_hyp};
  double y = launch.height_m;
  double z = 0.0;

  struct Event {
    double z = 0.0;
    const Constriction* plane = nullptr;  // null = collision
  };
  // Typical collision counts are small; a fixed-capacity local list keeps the
  // hot path allocation-free.
  std::vector<Event> events;
  events.reserve(16);
  if (ctx.gas != nullptr && ctx.number_density > 0.0) {
    const double length = config.detector.position_m;
    const double mean_count =
        ctx.number_density * ctx.coeffs.at(launch.speed_mps) * length;
    const std::uint64_t count = rng.poisson(mean_count);
    for (std::uint64_t i = 0; i < count; ++i) {
      events.push_back({length * rng.uniform(), nullptr});
    }
  }
  events.push_back({config.mid.position_m, &config.mid});
  events.push_back({config.detector.position_m, &config.detector});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.z != b.z) return a.z < b.z;
    return (a.plane == nullptr) < (b.plane == nullptr);  // plane first on ties
  });

  const double g = config.gravity_mps2;
  for (const Event& event : events) {
    if (v.z <= kMinAxialSpeed) return -1.0;
    const double dt = (event.z - z) / v.z;
    y += v.y * dt - 0.5 * g * square(dt);
    v.y -= g * dt;
    z = event.z;
    if (event.plane != nullptr) {
      if (std::abs(y - event.plane->center_m) > 0.5 * event.plane->height_m) return -1.0;
    } else {
      v = collide(v, config.molecule.mass_kg(), *ctx.gas, ctx.kick, rng);
    }
  }
  return norm(v);
}

}  // namespace

void validate(const BeamlineConfig& config) {
  if (config.source.position_m != 0.0) throw validity_error("source must sit at position 0");
  if (!(config.mid.position_m > 0.0 && config.detector.position_m > config.mid.position_m)) {
    throw validity_error("slit positions must increase along the beam");
  }
  for (const Constriction* slit : {&config.source, &config.mid, &config.detector}) {
    if (!(slit->height_m > 0.0)) throw validity_error("slit heights must be positive");
  }
  if (!(config.molecule.mass_amu > 0.0)) throw validity_error("molecule mass must be positive");
  if (!(config.oven_temperature_k > 0.0)) throw validity_error("oven temperature must be positive");
  if (!(config.gravity_mps2 >= 0.0)) throw validity_error("gravity must be non-negative");
  if (!(config.slope_max > config.slope_min)) throw validity_error("launch cone is empty");
  if (!(config.speed_min_mps >= 0.0) ||
      (config.speed_max_mps != 0.0 && !(config.speed_max_mps > config.speed_min_mps))) {
    throw validity_error("speed window is empty");
  }
}

BeamlineConfig make_aligned_beamline(double total_length_m, double design_speed_mps,
                                     double source_height_m, double mid_height_m,
                                     double detector_height_m, double oven_temperature_k,
                                     double gravity_mps2) {
  if (!(total_length_m > 0.0)) throw validity_error("beamline length must be positive");
  if (!(design_speed_mps > 0.0)) throw validity_error("design speed must be positive");
  BeamlineConfig config;
  config.molecule = c70();
  config.oven_temperature_k = oven_temperature_k;
  config.gravity_mps2 = gravity_mps2;
  const double z1 = 0.5 * total_length_m;
  const double z2 = total_length_m;
  const double g = gravity_mps2;
  config.source = {0.0, 0.0, source_height_m};
  config.mid = {z1, -g * square(z1) / (2.0 * square(design_speed_mps)), mid_height_m};
  config.detector = {z2, -g * square(z2) / (2.0 * square(design_speed_mps)), detector_height_m};
  config.speed_min_mps = 0.81 * design_speed_mps;
  config.speed_max_mps = 1.25 * design_speed_mps;
  // Exact covering cone, padded by 15%. With the mid slit halfway down the
  // machine, a trajectory threads all three slits only if its sag mismatch
  // at the mid slit (relative to the design parabola) stays within
  // delta_max = (h_source/2 + h_mid + h_detector/2) / 2; the extreme launch
  // slopes compatible with any such trajectory are the bounds below.
  const double sag_mid = g * square(z1) / (2.0 * square(design_speed_mps));
  const double delta_max =
      0.5 * (0.5 * source_height_m + mid_height_m + 0.5 * detector_height_m);
  double lo =
      (config.mid.center_m - 0.5 * mid_height_m + sag_mid - delta_max - 0.5 * source_height_m) /
      z1;
  double hi =
      (config.mid.center_m + 0.5 * mid_height_m + sag_mid + delta_max + 0.5 * source_height_m) /
      z1;
  const double pad = 0.15 * (hi - lo);
  config.slope_min = lo - pad;
  config.slope_max = hi + pad;
  validate(config);
  return config;
}

BeamlineConfig make_calibrated_beamline() {
  return make_aligned_beamline(2.38, 116.5, 170e-6, 30e-6, 40e-6, 900.0,
                               constants::standard_gravity);
}

LaunchSample sample_source(const BeamlineConfig& config, RngStream& rng) {
  const double v_scale =
      most_probable_speed(config.molecule.mass_kg(), config.oven_temperature_k);
  LaunchSample launch;
  for (;;) {
    // Effusive speed: v = vw sqrt(E1 + E2) has density proportional to
    // v^3 exp(-(v / vw)^2).
    launch.speed_mps = v_scale * std::sqrt(rng.exponential() + rng.exponential());
    if (launch.speed_mps < config.speed_min_mps) continue;
    if (config.speed_max_mps > 0.0 && launch.speed_mps > config.speed_max_mps) continue;
    break;
  }
  launch.height_m = config.source.center_m + (rng.uniform() - 0.5) * config.source.height_m;
  launch.slope = rng.uniform(config.slope_min, config.slope_max);
  return launch;
}

double propagate(const BeamlineConfig& config, const TransportConditions& conditions,
                 const LaunchSample& launch, RngStream& rng) {
  validate(config);
  TransportContext ctx;
  ctx.config = &config;
  ctx.kick = conditions.kick;
  if (conditions.gas.pressure_pa > 0.0) {
    if (ctx.kick.kind == ScatteringKind::CompleteDecoherence) {
      throw validity_error("transport kicks need an angular law (isotropic or forward-peaked)");
    }
    ctx.gas = &conditions.gas;
    ctx.number_density = conditions.gas.number_density();
    ctx.coeffs = cross_section_coeffs(conditions.gas.gas, conditions.gas.temperature_k);
  }
  return transport_one(ctx, launch, rng);
}

double DetectedDistribution::bin_width() const {
  return (histogram_max_mps - histogram_min_mps) / static_cast<double>(weights.size());
}

double DetectedDistribution::bin_center(int i) const {
  return histogram_min_mps + (i + 0.5) * bin_width();
}

double DetectedDistribution::detected_fraction() const {
  return samples == 0 ? 0.0 : static_cast<double>(survivors) / static_cast<double>(samples);
}

double DetectedDistribution::mean_speed() const {
  if (survivors == 0) throw empty_result_error("no molecule reached the detector");
  return sum_speed / static_cast<double>(survivors);
}

double DetectedDistribution::speed_variance() const {
  const double mean = mean_speed();
  return std::max(0.0, sum_speed_squared / static_cast<double>(survivors) - square(mean));
}

double DetectedDistribution::fwhm() const {
  const auto peak_it = std::max_element(weights.begin(), weights.end());
  if (peak_it == weights.end() || *peak_it <= 0.0) {
    throw empty_result_error("histogram is empty; widen the histogram range");
  }
  const double half = 0.5 * *peak_it;

  // Width of the support at half maximum: outermost bins still at or above
  // half height, linearly interpolated against their outer neighbours. The
  // outermost convention keeps the estimate stable when bin noise dents the
  // region near the peak.
  std::size_t lo_i = 0;
  while (weights[lo_i] < half) ++lo_i;
  std::size_t hi_i = weights.size() - 1;
  while (weights[hi_i] < half) --hi_i;

  auto interpolate = [&](std::size_t inner, std::size_t outer) {
    if (weights[outer] == weights[inner]) return bin_center(static_cast<int>(inner));
    const double frac = (half - weights[inner]) / (weights[outer] - weights[inner]);
    return bin_center(static_cast<int>(inner)) +
           frac * (bin_center(static_cast<int>(outer)) - bin_center(static_cast<int>(inner)));
  };
  const double left = lo_i > 0 ? interpolate(lo_i, lo_i - 1) : bin_center(0);
  const double right = hi_i + 1 < weights.size() ? interpolate(hi_i, hi_i + 1)
                                                 : bin_center(static_cast<int>(hi_i));
  return right - left;
}

DetectedDistribution detected_speed_distribution(const BeamlineConfig& config,
                                                 const TransportConditions& conditions,
                                                 const BeamlineRunParams& params) {
  validate(config);
  if (params.samples == 0) throw validity_error("sample count must be positive");
  if (params.histogram_bins < 1 || !(params.histogram_max_mps > params.histogram_min_mps)) {
    throw validity_error("histogram range is empty");
  }
  if (params.threads < 1) throw validity_error("thread count must be positive");

  TransportContext ctx;
  ctx.config = &config;
  ctx.kick = conditions.kick;
  if (conditions.gas.pressure_pa > 0.0) {
    if (ctx.kick.kind == ScatteringKind::CompleteDecoherence) {
      throw validity_error("transport kicks need an angular law (isotropic or forward-peaked)");
    }
    ctx.gas = &conditions.gas;
    ctx.number_density = conditions.gas.number_density();
    // Validates the model once at the fastest launch speed (warns/throws).
    const double v_check = config.speed_max_mps > 0.0
                               ? config.speed_max_mps
                               : 3.0 * most_probable_speed(config.molecule.mass_kg(),
                                                           config.oven_temperature_k);
    effective_cross_section(conditions.gas.gas, v_check, conditions.gas.temperature_k);
    ctx.coeffs = cross_section_coeffs(conditions.gas.gas, conditions.gas.temperature_k);
  }

  const std::uint64_t n_blocks = (params.samples + kBlockSize - 1) / kBlockSize;
  struct BlockPartial {
    std::vector<double> weights;
    std::uint64_t survivors = 0;
    double sum_speed = 0.0;
    double sum_speed_squared = 0.0;
  };
  std::vector<BlockPartial> partials(n_blocks);

  const double bin_lo = params.histogram_min_mps;
  const double bin_span = params.histogram_max_mps - params.histogram_min_mps;
  const int n_bins = params.histogram_bins;

  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t block = next_block.fetch_add(1);
      if (block >= n_blocks) return;
      BlockPartial& partial = partials[block];
      partial.weights.assign(static_cast<std::size_t>(n_bins), 0.0);
      const std::uint64_t begin = block * kBlockSize;
      const std::uint64_t end = std::min(params.samples, begin + kBlockSize);
      for (std::uint64_t i = begin; i < end; ++i) {
        RngStream rng(params.seed, i);
        const LaunchSample launch = sample_source(config, rng);
        const double speed = transport_one(ctx, launch, rng);
        if (speed < 0.0) continue;
        ++partial.survivors;
        partial.sum_speed += speed;
        partial.sum_speed_squared += square(speed);
        const double position = (speed - bin_lo) / bin_span * n_bins;
        if (position >= 0.0 && position < n_bins) {
          partial.weights[static_cast<std::size_t>(position)] += 1.0;
        }
      }
    }
  };

  const int n_threads = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(params.threads), n_blocks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  DetectedDistribution result;
  result.histogram_min_mps = params.histogram_min_mps;
  result.histogram_max_mps = params.histogram_max_mps;
  result.weights.assign(static_cast<std::size_t>(n_bins), 0.0);
  result.samples = params.samples;
  for (const BlockPartial& partial : partials) {  // fixed block order
    result.survivors += partial.survivors;
    result.sum_speed += partial.sum_speed;
    result.sum_speed_squared += partial.sum_speed_squared;
    for (int b = 0; b < n_bins; ++b) {
      result.weights[static_cast<std::size_t>(b)] += partial.weights[static_cast<std::size_t>(b)];
    }
  }
  if (result.survivors == 0) throw empty_result_error("no molecule reached the detector");
  return result;
}

double corrected_visibility(const DetectedDistribution& distribution,
                            const std::function<double(double)>& vacuum_visibility_of_speed,
                            const std::function<double(double)>& decay_pressure_of_speed,
                            double pressure_pa) {
  if (!(pressure_pa >= 0.0)) throw validity_error("pressure must be non-negative");
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < distribution.weights.size(); ++i) {
    const double w = distribution.weights[i];
    if (w <= 0.0) continue;
    const double v = distribution.bin_center(static_cast<int>(i));
    weighted += w * vacuum_visibility_of_speed(v) *
                std::exp(-pressure_pa / decay_pressure_of_speed(v));
    total += w;
  }
  if (total <= 0.0) throw empty_result_error("detected distribution is empty");
  return weighted / total;
}

}  // namespace tlsim
