#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hardy/constants.hpp"

using namespace hardy;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("exponent validation") {
  CHECK(Exponent(2.0).value() == 2.0);
  CHECK(Exponent(1.5).value() == 1.5);
  CHECK(Exponent(2.0).inv() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Exponent(2.0).half_angle() == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK_THROWS_AS(Exponent(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(-3.0), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Exponent(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("sharp constant spot values") {
  CHECK(sharp_constant(Exponent(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sharp_constant(Exponent(1.5)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // cos(pi/8) = sqrt(2+sqrt(2))/2; value checked against a 40-digit evaluation
  CHECK(sharp_constant(Exponent(4.0)) ==
        doctest::Approx(0.68629150101523961).epsilon(1e-14));
}

TEST_CASE("profile bound spot values") {
  CHECK(profile_bound(Exponent(2.0)) ==
        doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(profile_bound(Exponent(1.5)) == doctest::Approx(kPi).epsilon(1e-14));
  // cos(pi/2p) -> 1 as p grows
  CHECK(profile_bound(Exponent(1e9)) == doctest::Approx(kPi / 2).epsilon(1e-9));
}

TEST_CASE("log gamma") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);

  // accuracy contract on [0.05, 50] against the C library implementation;
  // the error of ln Gamma is the relative error of Gamma itself
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = 0.05 + (50.0 - 0.05) * i / 2000.0;
    const double mine = log_gamma(x);
    const double ref = std::lgamma(x);
    worst = std::max(worst, std::abs(mine - ref));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("beta function") {
  CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_function(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(beta_function(0.25, 0.75) ==
        doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(beta_function(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(beta_function(1.0, -2.0), std::invalid_argument);

  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(1e-3, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = dist(rng);
    const double b = dist(rng);
    CHECK(beta_function(a, b) ==
          doctest::Approx(beta_function(b, a)).epsilon(1e-13));
  }
}

TEST_CASE("constant identities across the p grid") {
  double prev_kp = std::numeric_limits<double>::infinity();
  for (double p : default_p_grid()) {
    const Exponent e(p);
    const SharpConstants sc = sharp_constants(e);
    const double cp_direct = kPi / std::pow(std::cos(kPi / (2 * p)), p);
    CHECK(std::abs(sc.cp - 2 * kPi * sc.kp) <= 1e-14 * sc.cp);
    CHECK(std::abs(sc.cp - cp_direct) <= 1e-14 * cp_direct);

    // endpoint identity: (1/2) B(1/2 - 1/2p, 1/2 + 1/2p) = B_p
    const double via_beta =
        0.5 * beta_function(0.5 - 0.5 / p, 0.5 + 0.5 / p);
    CHECK(std::abs(via_beta - sc.bp) <= 1e-12 * sc.bp);

    // K_p strictly decreasing in p
    CHECK(sc.kp < prev_kp);
    prev_kp = sc.kp;

    CHECK(sc.bp >= kPi / 2);
  }
}
