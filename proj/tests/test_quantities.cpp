#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "casimir/quantities.hpp"

using namespace casimir;

TEST_CASE("effective temperature at reference separations") {
  // Frozen from hbar c / (2 a k_B) evaluated with CODATA 2018 in double precision.
  CHECK(effective_temperature(Separation(1e-6)) == doctest::Approx(1144.9422596038391).epsilon(1e-14));
  CHECK(effective_temperature(Separation(2e-6)) == doctest::Approx(572.4711298019196).epsilon(1e-14));
  CHECK(effective_temperature(Separation(0.5e-6)) == doctest::Approx(2289.8845192076783).epsilon(1e-14));
}

TEST_CASE("effective temperature is strictly decreasing with a constant product") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_a(std::log(1e-8), std::log(1e-5));
  const double reference = effective_temperature(Separation(1e-6)) * 1e-6;
  for (int i = 0; i < 500; ++i) {
    const double a1 = std::exp(log_a(rng));
    const double a2 = a1 * (1.0 + 1e-6 + std::abs(log_a(rng)) * 1e-3);
    CHECK(effective_temperature(Separation(a2)) < effective_temperature(Separation(a1)));
    const double product = effective_temperature(Separation(a1)) * a1;
    CHECK(std::abs(product - reference) / reference < 1e-12);
  }
}

TEST_CASE("skin depth parameter") {
  CHECK(skin_depth_parameter(136e-9) == doctest::Approx(2.1645072260497766e-08).epsilon(1e-14));
  CHECK(skin_depth_parameter(0.0) == 0.0);
  CHECK(skin_depth_parameter(2.0 * kCodata2018.pi * 1e-8) == doctest::Approx(1e-8).epsilon(1e-15));
  CHECK_THROWS_AS((void)skin_depth_parameter(-1e-9), DomainError);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double k = u(rng);
    const double lp = u(rng) * 1e-7;
    CHECK(skin_depth_parameter(k * lp) == doctest::Approx(k * skin_depth_parameter(lp)).epsilon(1e-14));
  }
}

TEST_CASE("constructors reject non-finite and non-positive values") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (double bad : {0.0, -1e-6, nan, inf}) {
    CHECK_THROWS_AS(Separation{bad}, DomainError);
    CHECK_THROWS_AS(Temperature{bad}, DomainError);
    CHECK_THROWS_AS(Radius{bad}, DomainError);
  }
  CHECK_THROWS_AS(PlasmaWavelength{-1.0}, DomainError);
  CHECK_THROWS_AS(PlasmaWavelength{nan}, DomainError);
  CHECK(PlasmaWavelength(0.0).is_ideal());
  CHECK(Separation::from_micrometers(0.5).meters() == doctest::Approx(5e-7));
}

TEST_CASE("derived scales") {
  const auto s = derived_scales(Separation(1e-6), Temperature(300), PlasmaWavelength(136e-9));
  CHECK(s.delta_over_a == doctest::Approx(0.021645072260497766));
  CHECK(s.T_over_Teff == doctest::Approx(300.0 / 1144.9422596038391));
}

TEST_CASE("validity classification") {
  const PlasmaWavelength au(136e-9);
  const Temperature t1(300), t2(350);

  const auto in = classify_validity(Separation(0.5e-6), t1, t2, au);
  CHECK(in.in_range());
  CHECK(in.warnings().empty());

  const auto below = classify_validity(Separation(0.1e-6), t1, t2, au);
  CHECK(below.separation_below_plasma_wavelength);
  CHECK_FALSE(below.separation_above_max);
  CHECK_FALSE(below.in_range());

  const auto above = classify_validity(Separation(3e-6), t1, t2, au);
  CHECK(above.separation_above_max);
  CHECK_FALSE(above.separation_below_plasma_wavelength);

  const auto hot = classify_validity(Separation(1e-6), t1, Temperature(400), au);
  CHECK(hot.temperature_above_max);
  CHECK(hot.warnings().size() == 1);

  // The smallest plotted separation sits just above the plasma wavelength.
  CHECK(classify_validity(Separation(0.15e-6), t1, t2, au).in_range());
}
