#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hardy/poisson.hpp"

using namespace hardy;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
const QuadratureOptions opt{1e-10, 2'000'000};

// Independent route for the certificate boundary values: principal-branch
// complex arithmetic on Re(1 - e^{2 i theta})^(-1/p).
double h_boundary_complex(double p, double theta) {
  const std::complex<double> w =
      1.0 - std::exp(std::complex<double>(0.0, 2.0 * theta));
  return std::pow(w, std::complex<double>(-1.0 / p, 0.0)).real();
}

TrigPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> normal;
  TrigPolynomial f;
  f.a0 = normal(rng);
  for (int n = 1; n <= degree; ++n) {
    f.cos_coeffs.push_back(normal(rng) / (1.0 + n));
    f.sin_coeffs.push_back(normal(rng) / (1.0 + n));
  }
  return f;
}

}  // namespace

TEST_CASE("poisson kernel values and domain") {
  CHECK(poisson_kernel(0.0, 1.234) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(poisson_kernel(0.5, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(poisson_kernel(0.5, kPi / 2) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK_THROWS_AS(poisson_kernel(1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(poisson_kernel(-1.2, 0.5), std::invalid_argument);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> rdist(-0.999, 0.999);
  std::uniform_real_distribution<double> tdist(0.0, kTwoPi);
  for (int i = 0; i < 500; ++i) {
    CHECK(poisson_kernel(rdist(rng), tdist(rng)) > 0.0);
  }
}

TEST_CASE("kernel has unit mean against the normalized measure") {
  for (double r : {0.0, 0.3, -0.3, 0.7, -0.7, 0.95, -0.95}) {
    auto f = [r](double theta) { return poisson_kernel(r, theta) / kTwoPi; };
    const QuadratureResult res = integrate(f, 0.0, kTwoPi, opt);
    CHECK(std::abs(res.value - 1.0) <= 1e-9);
  }
}

TEST_CASE("harmonic extension basics") {
  BoundaryFunction unit{[](double) { return 1.0; }, {}};
  CHECK(std::abs(extend(unit, 0.3, opt).value - 1.0) <= 1e-9);
  CHECK(std::abs(extend(unit, -0.8, opt).value - 1.0) <= 1e-9);

  BoundaryFunction cosine{[](double t) { return std::cos(t); }, {}};
  CHECK(std::abs(extend(cosine, 0.5, opt).value - 0.5) <= 1e-9);

  CHECK_THROWS_AS(extend(unit, 1.0, opt), std::invalid_argument);
}

TEST_CASE("extension of trig polynomials matches the closed form") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const TrigPolynomial f = random_poly(rng, 8);
    BoundaryFunction bf{[&f](double t) { return f.boundary(t); }, {}};
    for (double r : {0.0, 0.45, -0.45, 0.85, -0.85}) {
      const double via_kernel = extend(bf, r, opt).value;
      CHECK(std::abs(via_kernel - f.diameter(r)) <= 10 * opt.tol);
    }
  }
}

TEST_CASE("adjoint operator") {
  SUBCASE("constant at theta = pi/2 has antiderivative 2 atan r - r") {
    const QuadratureResult res =
        adjoint([](double) { return 1.0; }, kPi / 2, {}, opt);
    CHECK(std::abs(res.value - (kPi - 2.0)) <= 1e-9);
  }
  SUBCASE("odd integrand cancels at theta = pi/2") {
    const QuadratureResult res =
        adjoint([](double r) { return r * r * r; }, kPi / 2, {}, opt);
    CHECK(std::abs(res.value) <= 1e-9);
  }
  SUBCASE("kernel factor cancels at theta = pi for g = 1 + r") {
    const QuadratureResult res =
        adjoint([](double r) { return 1.0 + r; }, kPi, {}, opt);
    CHECK(std::abs(res.value - 2.0) <= 1e-9);
  }
  SUBCASE("g = 1 at theta = pi diverges and is reported") {
    CHECK_THROWS_AS(adjoint([](double) { return 1.0; }, kPi, {}, opt),
                    NonConvergence);
  }
  SUBCASE("theta = 0 mod 2pi is rejected") {
    CHECK_THROWS_AS(adjoint([](double) { return 1.0; }, 0.0, {}, opt),
                    std::invalid_argument);
    CHECK_THROWS_AS(adjoint([](double) { return 1.0; }, kTwoPi, {}, opt),
                    std::invalid_argument);
  }
}

TEST_CASE("certificate boundary values") {
  const Exponent p2(2.0);
  CHECK(h_boundary(p2, kPi / 2) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  // leading-order growth near 0: 2^(-1/2) theta^(-1/2) cos(pi/4)
  const double t = 1e-6;
  const double lead = std::pow(2.0 * t, -0.5) * std::cos(kPi / 4);
  CHECK(h_boundary(p2, t) == doctest::Approx(lead).epsilon(1e-4));

  CHECK_THROWS_AS(h_boundary(p2, 0.0), std::domain_error);
  CHECK_THROWS_AS(h_boundary(p2, kPi), std::domain_error);
  CHECK_THROWS_AS(h_boundary(p2, kTwoPi), std::domain_error);
  CHECK_THROWS_AS(h_boundary(p2, -0.3), std::domain_error);

  SUBCASE("matches the complex-arithmetic oracle on a random grid") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> tdist(1e-3, kTwoPi - 1e-3);
    std::uniform_real_distribution<double> pdist(1.05, 16.0);
    int used = 0;
    while (used < 300) {
      const double theta = tdist(rng);
      if (std::abs(theta - kPi) < 1e-3) continue;
      const double p = pdist(rng);
      const double closed = h_boundary(Exponent(p), theta);
      const double via_complex = h_boundary_complex(p, theta);
      CHECK(std::abs(closed - via_complex) <=
            1e-12 * std::max(1.0, std::abs(closed)));
      ++used;
    }
  }
  SUBCASE("second branch equals the first with theta - pi and |sin|") {
    const Exponent e(3.0);
    for (double theta : {3.5, 4.2, 5.0, 6.0}) {
      const double direct = h_boundary(e, theta);
      const double expected = std::pow(2.0, -e.inv()) *
                              std::pow(std::abs(std::sin(theta)), -e.inv()) *
                              std::cos(e.half_angle() - (theta - kPi) * e.inv());
      CHECK(direct == doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("interior power of the certificate family") {
  CHECK(re_power_interior(0.37, {0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(re_power_interior(0.5, {0.0, 0.5}) ==
        doctest::Approx(1.0 / std::sqrt(1.25)).epsilon(1e-14));
  for (double r : {-0.9, -0.4, 0.2, 0.7}) {
    CHECK(re_power_interior(1.0 / 3.0, {r, 0.0}) ==
          doctest::Approx(std::pow(1.0 - r * r, -1.0 / 3.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(re_power_interior(0.5, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(re_power_interior(1.5, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(re_power_interior(0.0, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("mean value identity for the certificate") {
  CHECK(std::abs(mean_value_check(Exponent(2.0), 0.0, opt)) <= 10 * opt.tol);
  CHECK(std::abs(mean_value_check(Exponent(3.0), 0.5, opt)) <= 10 * opt.tol);
  CHECK(std::abs(mean_value_check(Exponent(1.25), -0.9, opt)) <= 10 * opt.tol);
}

TEST_CASE("trig polynomial rotation matches evaluation at the rotated angle") {
  std::mt19937_64 rng(31);
  const TrigPolynomial f = random_poly(rng, 6);
  for (double s : {0.0, 0.7, 2.9, 5.5}) {
    const TrigPolynomial g = f.rotated(s);
    for (double r : {0.15, 0.6, 0.95}) {
      CHECK(g.diameter(r) == doctest::Approx(f.extension(r, s)).epsilon(1e-12));
      CHECK(g.diameter(-r) ==
            doctest::Approx(f.extension(r, s + kPi)).epsilon(1e-12));
    }
    CHECK(g.coefficient_norm() ==
          doctest::Approx(f.coefficient_norm()).epsilon(1e-12));
  }
}
