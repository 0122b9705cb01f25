// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
//
// Constants, kinematic relations, species data and error plumbing.
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/kinematics.hpp"
#include "tlsim/math.hpp"
#include "tlsim/quadrature.hpp"
#include "tlsim/species.hpp"
#include "tlsim/units.hpp"

using namespace tlsim;

TEST_CASE("fundamental constants carry their defined values") {
  CHECK(constants::planck == 6.62607015e-34);
  CHECK(constants::boltzmann == 1.380649e-23);
  CHECK(constants::atomic_mass == 1.66053906660e-27);
  CHECK(constants::standard_gravity == 9.80665);
  CHECK(constants::electron_volt == 1.602176634e-19);
  // hbar is tabulated; it must agree with h / (2 pi) to its own precision.
  CHECK(constants::hbar ==
        doctest::Approx(constants::planck / (2.0 * constants::pi)).epsilon(1e-10));
}

TEST_CASE("unit conversions are exact scale factors") {
  CHECK(units::mbar_to_pascal(1.0) == 100.0);
  CHECK(units::pascal_to_mbar(250.0) == 2.5);
  CHECK(units::amu_to_kg(1.0) == constants::atomic_mass);
  CHECK(units::mev_nm6_to_si(1.0) == doctest::Approx(1.602176634e-76).epsilon(1e-15));
  CHECK(units::si_to_mev_nm6(units::mev_nm6_to_si(3.7)) == doctest::Approx(3.7).epsilon(1e-15));
}

TEST_CASE("matter-wave wavelength is h over momentum") {
  const double mass = units::amu_to_kg(840.77);
  // Frozen value cross-checked by hand: h / (840.77 u * 106 m/s).
  CHECK(de_broglie_wavelength(mass, 106.0) == doctest::Approx(4.477379e-12).epsilon(1e-6));
  // The defining identity lambda * m * v = h over a parameter sweep.
  for (double v : {10.0, 117.0, 2500.0}) {
    for (double m_amu : {2.0, 840.77, 5e7}) {
      const double m = units::amu_to_kg(m_amu);
      CHECK(de_broglie_wavelength(m, v) * m * v ==
            doctest::Approx(constants::planck).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(de_broglie_wavelength(mass, 0.0), validity_error);
  CHECK_THROWS_AS(de_broglie_wavelength(0.0, 100.0), validity_error);
  CHECK_THROWS_AS(de_broglie_wavelength(mass, -1.0), validity_error);
}

TEST_CASE("self-imaging length is period squared over wavelength") {
  const double lambda = de_broglie_wavelength(units::amu_to_kg(840.77), 106.0);
  CHECK(talbot_length(991e-9, lambda) == doctest::Approx(0.219343).epsilon(1e-5));
  CHECK(talbot_length(991e-9, 4.48e-12) ==
        doctest::Approx(991e-9 * 991e-9 / 4.48e-12).epsilon(1e-15));
}

TEST_CASE("thermal speed scales agree with their definitions") {
  const double m_ch4 = find_gas("CH4").mass_kg();
  const double m_n2 = find_gas("N2").mass_kg();
  const double m_xe = find_gas("Xe").mass_kg();
  CHECK(most_probable_speed(m_ch4, 300.0) == doctest::Approx(557.6349).epsilon(1e-6));
  CHECK(most_probable_speed(m_n2, 300.0) == doctest::Approx(421.9929).epsilon(1e-6));
  CHECK(most_probable_speed(m_xe, 300.0) == doctest::Approx(194.9270).epsilon(1e-6));
  // Definition: sqrt(2 kB T / m).
  CHECK(most_probable_speed(m_ch4, 300.0) ==
        doctest::Approx(std::sqrt(2.0 * constants::boltzmann * 300.0 / m_ch4)).epsilon(1e-15));
  // Mean thermal speed exceeds the mode by exactly 2 / sqrt(pi).
  CHECK(mean_thermal_speed(m_ch4, 300.0) / most_probable_speed(m_ch4, 300.0) ==
        doctest::Approx(1.128379167).epsilon(1e-9));
}

TEST_CASE("speed densities are normalized and peak where they should") {
  const double m = find_gas("N2").mass_kg();
  const double vt = most_probable_speed(m, 300.0);

  SUBCASE("thermal gas") {
    const auto norm = integrate([&](double v) { return maxwell_speed_pdf(v, m, 300.0); }, 0.0,
                                12.0 * vt, {1e-10, 1e-14});
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-9));
    // Density increases up to the most probable speed and decreases beyond.
    CHECK(maxwell_speed_pdf(0.95 * vt, m, 300.0) < maxwell_speed_pdf(vt, m, 300.0));
    CHECK(maxwell_speed_pdf(1.05 * vt, m, 300.0) < maxwell_speed_pdf(vt, m, 300.0));
  }

  SUBCASE("effusive beam") {
    const auto norm = integrate([&](double v) { return effusive_speed_pdf(v, m, 300.0); }, 0.0,
                                12.0 * vt, {1e-10, 1e-14});
    CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-9));
    const auto mean = integrate([&](double v) { return v * effusive_speed_pdf(v, m, 300.0); },
                                0.0, 12.0 * vt, {1e-10, 1e-14});
    // Mean of the v^3 exp(-(v/vw)^2) density: (3 sqrt(pi) / 4) vw.
    CHECK(mean.value == doctest::Approx(0.75 * std::sqrt(constants::pi) * vt).epsilon(1e-9));
    // The beam density is the thermal one reweighted by v (flux weighting):
    // their ratio must be linear in v.
    const double r1 = effusive_speed_pdf(vt, m, 300.0) / maxwell_speed_pdf(vt, m, 300.0);
    const double r2 =
        effusive_speed_pdf(2.0 * vt, m, 300.0) / maxwell_speed_pdf(2.0 * vt, m, 300.0);
    CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("species table provides the nine tabulated gases") {
  const auto table = gas_table();
  REQUIRE(table.size() == 9);
  const std::vector<std::string> names = {"H2", "D2", "He", "CH4", "N2", "Ne", "Ar", "Kr", "Xe"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(table[i].name == names[i]);
  for (const auto& gas : table) {
    CHECK(gas.mass_amu > 0.0);
    CHECK(gas.c6_mev_nm6 > 0.0);
  }
  CHECK(find_gas("CH4").mass_amu == doctest::Approx(16.04).epsilon(1e-2));
  CHECK_THROWS_AS(find_gas("Rn"), config_error);
  CHECK_THROWS_AS(find_gas("ch4"), config_error);  // lookups are case-sensitive
}

TEST_CASE("default molecule is the fullerene used throughout") {
  CHECK(c70().mass_amu == 840.77);
  CHECK(c70().mass_kg() == doctest::Approx(units::amu_to_kg(840.77)).epsilon(1e-15));
}

TEST_CASE("mass-only dispersion estimate is linear in the mass") {
  CHECK(dispersion_coefficient_from_mass(840.77) == doctest::Approx(2.9427).epsilon(1e-4));
  CHECK(dispersion_coefficient_from_mass(5e7) == doctest::Approx(1.75e5).epsilon(1e-12));
  CHECK(dispersion_coefficient_from_mass(2e7) / dispersion_coefficient_from_mass(1e7) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gas state reports ideal-gas density") {
  const auto state = make_gas_state(find_gas("CH4"), 300.0, 2e-4);
  CHECK(state.number_density() ==
        doctest::Approx(2e-4 / (constants::boltzmann * 300.0)).epsilon(1e-14));
  CHECK(state.most_probable_speed() == doctest::Approx(557.6349).epsilon(1e-6));
  CHECK_THROWS_AS(make_gas_state(find_gas("CH4"), 0.0, 1.0), validity_error);
  CHECK_THROWS_AS(make_gas_state(find_gas("CH4"), 300.0, -1.0), validity_error);
  CHECK_NOTHROW(make_gas_state(find_gas("CH4"), 300.0, 0.0));  // vacuum is fine
}

TEST_CASE("warnings reach the installed handler") {
  std::vector<std::string> seen;
  set_warning_handler([&seen](const std::string& message) { seen.push_back(message); });
  emit_warning("test message");
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == "test message");
  set_warning_handler(nullptr);  // restore the default stderr handler
}

TEST_CASE("small math helpers behave at their edges") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1e-8) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sincn(1.0) == doctest::Approx(0.0));
  CHECK(sincn(0.5) == doctest::Approx(2.0 / constants::pi).epsilon(1e-15));
  CHECK(wrap_centered(1.75, 1.0) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(wrap_centered(-0.5, 1.0) == -0.5);
  CHECK(wrap_centered(0.5, 1.0) == -0.5);  // half-open interval
}
