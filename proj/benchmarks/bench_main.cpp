// Microbenchmarks for the hot paths: spectrum assembly, the coherence
// kernel, the per-harmonic damping quadratures, and beamline transport.
#include <benchmark/benchmark.h>

#include "tlsim/beamline.hpp"
#include "tlsim/collisions.hpp"
#include "tlsim/config.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/species.hpp"
#include "tlsim/talbot_lau.hpp"

namespace {

using namespace tlsim;

InterferometerGeometry calibrated_geometry() {
  return InterferometerGeometry{GratingSpec{991e-9, 475e-9, kCalibratedPhaseParameter}, 0.22, 5};
}

void BM_TalbotSpectrum(benchmark::State& state) {
  const auto geometry = calibrated_geometry();
  const double wavelength = de_broglie_wavelength(c70().mass_kg(), 117.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(talbot_lau_spectrum(geometry, wavelength));
  }
}
BENCHMARK(BM_TalbotSpectrum);

void BM_CoherenceKernel(benchmark::State& state) {
  const GasSpecies& gas = find_gas("CH4");
  const auto model = ScatteringModel::isotropic();
  const double delta_r = 1e-11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence_after_collision(delta_r, gas, 300.0, model));
  }
}
BENCHMARK(BM_CoherenceKernel);

void BM_DecoherenceExponents(benchmark::State& state) {
  const auto geometry = calibrated_geometry();
  const double wavelength = de_broglie_wavelength(c70().mass_kg(), 117.0);
  const auto spectrum = talbot_lau_spectrum(geometry, wavelength);
  const auto gas_state = make_gas_state(find_gas("CH4"), 300.0, 1e-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoherence_exponents(spectrum, gas_state, 117.0,
                                                   geometry.spacing_m,
                                                   ScatteringModel::isotropic()));
  }
}
BENCHMARK(BM_DecoherenceExponents);

void BM_BeamlineTransport(benchmark::State& state) {
  const auto config = make_calibrated_beamline();
  TransportConditions vacuum;
  vacuum.gas = make_gas_state(find_gas("CH4"), 300.0, 0.0);
  BeamlineRunParams params;
  params.samples = static_cast<std::uint64_t>(state.range(0));
  params.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(detected_speed_distribution(config, vacuum, params));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BeamlineTransport)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
