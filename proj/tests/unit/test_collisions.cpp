// Tests for collisional decoherence: the velocity-averaged cross section,
// the post-collision coherence kernel (closed form vs. angular quadrature),
// the per-harmonic damping exponents, and the pressure-decay helpers.
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tlsim/collisions.hpp"
#include "tlsim/config.hpp"
#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/scattering.hpp"
#include "tlsim/species.hpp"
#include "tlsim/talbot_lau.hpp"
#include "tlsim/units.hpp"

using doctest::Approx;
using namespace tlsim;

namespace {

const GasSpecies& methane() { return find_gas("CH4"); }

InterferometerGeometry standard_geometry() {
  return InterferometerGeometry{GratingSpec{991e-9, 475e-9, kCalibratedPhaseParameter}, 0.22, 5};
}

}  // namespace

TEST_CASE("effective cross section reproduces the frozen methane value") {
  CHECK(effective_cross_section(methane(), 117.0, 300.0) ==
        Approx(9.831805e-17).epsilon(1e-6));
}

TEST_CASE("cross section times speed is quadratic in the beam speed") {
  // The model is sigma(v) * v = alpha + beta v^2 at fixed gas temperature;
  // three samples over-determine (alpha, beta), so consistency of the two
  // implied betas is an exact structural check.
  const GasSpecies& gas = methane();
  const double v1 = 50.0, v2 = 100.0, v3 = 150.0;
  const double s1 = effective_cross_section(gas, v1, 300.0) * v1;
  const double s2 = effective_cross_section(gas, v2, 300.0) * v2;
  const double s3 = effective_cross_section(gas, v3, 300.0) * v3;
  const double beta12 = (s2 - s1) / (v2 * v2 - v1 * v1);
  const double beta13 = (s3 - s1) / (v3 * v3 - v1 * v1);
  CHECK(beta12 == Approx(beta13).epsilon(1e-12));
}

TEST_CASE("cross section scales as the two-fifths power of the dispersion strength") {
  const GasSpecies base{"test", 16.04, 2.0};
  const GasSpecies stronger{"test32", 16.04, 64.0};  // 32x the dispersion coefficient
  const double ratio = effective_cross_section(stronger, 117.0, 300.0) /
                       effective_cross_section(base, 117.0, 300.0);
  CHECK(ratio == Approx(4.0).epsilon(1e-9));  // 32^(2/5)
}

TEST_CASE("cross section model reports its validity limits") {
  std::vector<std::string> warnings;
  set_warning_handler([&warnings](const std::string& msg) { warnings.push_back(msg); });
  SUBCASE("fast beams trigger a truncation warning") {
    // 300 m/s is 0.54 of the methane most probable speed at 300 K.
    (void)effective_cross_section(methane(), 300.0, 300.0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().find("marginal") != std::string::npos);
  }
  SUBCASE("beams faster than the gas are rejected") {
    CHECK_THROWS_AS((void)effective_cross_section(methane(), 600.0, 300.0), validity_error);
    CHECK(warnings.empty());
  }
  SUBCASE("the slow design beam is silent") {
    (void)effective_cross_section(methane(), 117.0, 300.0);
    CHECK(warnings.empty());
  }
  set_warning_handler(nullptr);
}

TEST_CASE("isotropic coherence kernel matches its closed form and frozen values") {
  const GasSpecies& gas = methane();
  const double vt = most_probable_speed(gas.mass_kg(), 300.0);
  SUBCASE("closed form is (1 - exp(-b^2)) / b^2") {
    for (double dr : {1e-12, 5e-12, 1e-11, 3e-11, 1e-10, 1e-9}) {
      const double b2 = std::pow(gas.mass_kg() * vt * dr / constants::hbar, 2.0);
      const double expected = (1.0 - std::exp(-b2)) / b2;
      CAPTURE(dr);
      CHECK(coherence_after_collision_isotropic(dr, gas, 300.0) ==
            Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("frozen values at 300 K") {
    CHECK(coherence_after_collision_isotropic(1e-12, gas, 300.0) ==
          Approx(0.990144).epsilon(2e-5));
    CHECK(coherence_after_collision_isotropic(5e-12, gas, 300.0) ==
          Approx(0.788353).epsilon(2e-5));
    CHECK(coherence_after_collision_isotropic(1e-11, gas, 300.0) ==
          Approx(0.434667).epsilon(2e-5));
    CHECK(coherence_after_collision_isotropic(3e-11, gas, 300.0) ==
          Approx(0.055994).epsilon(2e-5));
    CHECK(coherence_after_collision_isotropic(1e-10, gas, 300.0) ==
          Approx(5.0394e-3).epsilon(1e-4));
    CHECK(coherence_after_collision_isotropic(1e-9, gas, 300.0) ==
          Approx(5.03944962e-05).epsilon(1e-8));
  }
  SUBCASE("angular quadrature agrees with the closed form") {
    const auto model = ScatteringModel::isotropic();
    for (double dr : {1e-12, 1e-11, 1e-10, 1e-9}) {
      const double closed = coherence_after_collision_isotropic(dr, gas, 300.0);
      const double quad = coherence_after_collision(dr, gas, 300.0, model);
      CAPTURE(dr);
      CHECK(std::abs(quad - closed) < 2e-6 * closed + 1e-9);
    }
  }
  SUBCASE("kernel is monotone decreasing in the separation") {
    double previous = 1.0;
    for (double dr : {1e-12, 3e-12, 1e-11, 3e-11, 1e-10}) {
      const double value = coherence_after_collision_isotropic(dr, gas, 300.0);
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("coherence kernel boundary behaviour across models") {
  const GasSpecies& gas = methane();
  SUBCASE("zero separation leaves full coherence") {
    CHECK(coherence_after_collision(0.0, gas, 300.0, ScatteringModel::isotropic()) == 1.0);
    CHECK(coherence_after_collision(0.0, gas, 300.0, ScatteringModel::forward_peaked(0.5)) == 1.0);
    CHECK(coherence_after_collision(0.0, gas, 300.0, ScatteringModel::complete()) == 1.0);
  }
  SUBCASE("complete decoherence destroys any separated superposition") {
    CHECK(coherence_after_collision(1e-13, gas, 300.0, ScatteringModel::complete()) == 0.0);
    CHECK(coherence_after_collision(1e-9, gas, 300.0, ScatteringModel::complete()) == 0.0);
  }
  SUBCASE("negative separation is rejected") {
    CHECK_THROWS_AS(
        (void)coherence_after_collision(-1e-12, gas, 300.0, ScatteringModel::isotropic()),
        validity_error);
  }
  SUBCASE("anisotropy outside [0, 1) is rejected") {
    CHECK_THROWS_AS((void)ScatteringModel::forward_peaked(1.0), validity_error);
    CHECK_THROWS_AS((void)ScatteringModel::forward_peaked(-0.1), validity_error);
  }
}

TEST_CASE("forward-peaked scattering keeps more coherence") {
  const GasSpecies& gas = methane();
  const double dr = 1e-11;
  SUBCASE("frozen values at increasing anisotropy") {
    CHECK(coherence_after_collision(dr, gas, 300.0, ScatteringModel::forward_peaked(0.0)) ==
          Approx(0.4347).epsilon(2e-3));
    CHECK(coherence_after_collision(dr, gas, 300.0, ScatteringModel::forward_peaked(0.5)) ==
          Approx(0.6734).epsilon(2e-3));
    CHECK(coherence_after_collision(dr, gas, 300.0, ScatteringModel::forward_peaked(0.9)) ==
          Approx(0.9264).epsilon(2e-3));
    CHECK(coherence_after_collision(dr, gas, 300.0, ScatteringModel::forward_peaked(0.99)) ==
          Approx(0.9924).epsilon(2e-3));
  }
  SUBCASE("zero anisotropy reduces to the isotropic model") {
    const double iso = coherence_after_collision(dr, gas, 300.0, ScatteringModel::isotropic());
    const double hg0 = coherence_after_collision(dr, gas, 300.0, ScatteringModel::forward_peaked(0.0));
    CHECK(hg0 == Approx(iso).epsilon(1e-9));
  }
}

TEST_CASE("per-harmonic damping exponents") {
  const auto geometry = standard_geometry();
  const double wavelength = de_broglie_wavelength(c70().mass_kg(), 117.0);
  const auto spectrum = talbot_lau_spectrum(geometry, wavelength);
  const auto state = make_gas_state(methane(), 300.0, units::mbar_to_pascal(1e-6));
  const double sigma = effective_cross_section(methane(), 117.0, 300.0);
  const double saturation = 2.0 * state.number_density() * sigma * geometry.spacing_m;

  SUBCASE("complete decoherence saturates every harmonic") {
    const auto exps = decoherence_exponents(spectrum, state, 117.0, geometry.spacing_m,
                                            ScatteringModel::complete());
    REQUIRE(exps.size() == 6);
    CHECK(exps[0] == 0.0);
    for (std::size_t l = 1; l < exps.size(); ++l) {
      CAPTURE(l);
      CHECK(exps[l] == Approx(saturation).epsilon(1e-12));
    }
  }
  SUBCASE("isotropic exponents are nearly saturated and ordered") {
    const auto exps = decoherence_exponents(spectrum, state, 117.0, geometry.spacing_m,
                                            ScatteringModel::isotropic());
    REQUIRE(exps.size() == 6);
    CHECK(exps[0] == 0.0);
    // Almost every collision resolves the first-harmonic path split over the
    // full machine length; the frozen ratio pins the small coherent credit.
    CHECK(exps[1] / saturation == Approx(0.99998603).epsilon(1e-6));
    for (std::size_t l = 1; l + 1 < exps.size(); ++l) {
      CAPTURE(l);
      CHECK(exps[l] <= exps[l + 1] * (1.0 + 1e-12));
    }
    CHECK(exps.back() <= saturation * (1.0 + 1e-12));
  }
  SUBCASE("zero pressure leaves every exponent zero") {
    const auto vacuum = make_gas_state(methane(), 300.0, 0.0);
    const auto exps = decoherence_exponents(spectrum, vacuum, 117.0, geometry.spacing_m,
                                            ScatteringModel::isotropic());
    for (double e : exps) CHECK(e == 0.0);
  }
  SUBCASE("a classical spectrum cannot be damped") {
    const auto shadow = shadow_spectrum(geometry);
    CHECK_THROWS_AS((void)decoherence_exponents(shadow, state, 117.0, geometry.spacing_m,
                                                ScatteringModel::isotropic()),
                    validity_error);
  }
}

TEST_CASE("damping preserves the mean transmission exactly") {
  const auto geometry = standard_geometry();
  const double wavelength = de_broglie_wavelength(c70().mass_kg(), 117.0);
  const auto spectrum = talbot_lau_spectrum(geometry, wavelength);
  for (double pressure_mbar : {0.0, 2e-7, 1e-6}) {
    const auto state = make_gas_state(methane(), 300.0, units::mbar_to_pascal(pressure_mbar));
    const auto damped = decohered_spectrum(spectrum, state, 117.0, geometry.spacing_m,
                                           ScatteringModel::isotropic());
    CAPTURE(pressure_mbar);
    CHECK(damped.t0() == spectrum.t0());
    if (pressure_mbar > 0.0) {
      CHECK(std::abs(damped.at(1)) < std::abs(spectrum.at(1)));
    } else {
      CHECK(damped.at(1) == spectrum.at(1));
    }
  }
}

TEST_CASE("pressure decay constants and the exponential law") {
  SUBCASE("frozen methane decay pressure") {
    const double p0 = decoherence_pressure(methane(), 117.0, 300.0, 0.22);
    CHECK(units::pascal_to_mbar(p0) == Approx(9.574556e-07).epsilon(1e-6));
  }
  SUBCASE("definition in terms of the cross section") {
    const double sigma = effective_cross_section(methane(), 117.0, 300.0);
    const double expected = constants::boltzmann * 300.0 / (2.0 * 0.22 * sigma);
    CHECK(decoherence_pressure(methane(), 117.0, 300.0, 0.22) ==
          Approx(expected).epsilon(1e-14));
  }
  SUBCASE("visibility decays exponentially in pressure") {
    const double value = visibility_vs_pressure(0.41, 6e-5, 9.5e-5);
    CHECK(value == Approx(0.41 * std::exp(-6e-5 / 9.5e-5)).epsilon(1e-14));
    CHECK(value == Approx(0.218016).epsilon(1e-4));
    CHECK(visibility_vs_pressure(0.41, 0.0, 9.5e-5) == 0.41);
    CHECK_THROWS_AS((void)visibility_vs_pressure(0.41, 1e-5, 0.0), validity_error);
  }
}
