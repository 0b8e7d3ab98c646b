#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hardy/experiments.hpp"

using namespace hardy;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadratureOptions opt{1e-10, 2'000'000};
}

TEST_CASE("random harmonic sampling") {
  const SampleSpec spec{8, 100, 42, 1.0};
  SUBCASE("deterministic") {
    const TrigPolynomial a = random_harmonic(spec, 17);
    const TrigPolynomial b = random_harmonic(spec, 17);
    CHECK(a.a0 == b.a0);
    CHECK(a.cos_coeffs == b.cos_coeffs);
    CHECK(a.sin_coeffs == b.sin_coeffs);
    const TrigPolynomial c = random_harmonic(spec, 18);
    CHECK(a.a0 != c.a0);
  }
  SUBCASE("degree zero is a constant") {
    const SampleSpec flat{0, 10, 7, 1.0};
    const TrigPolynomial f = random_harmonic(flat, 3);
    CHECK(f.degree() == 0);
    CHECK(f.a0 != 0.0);
  }
  SUBCASE("no decay leaves all coefficients in general position") {
    const SampleSpec wide{8, 10, 11, 0.0};
    const TrigPolynomial f = random_harmonic(wide, 0);
    CHECK(f.degree() == 8);
    int nonzero = f.a0 != 0.0 ? 1 : 0;
    for (double v : f.cos_coeffs) nonzero += v != 0.0 ? 1 : 0;
    for (double v : f.sin_coeffs) nonzero += v != 0.0 ? 1 : 0;
    CHECK(nonzero == 17);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(random_harmonic(spec, -1), std::invalid_argument);
    CHECK_THROWS_AS(random_harmonic(spec, 100), std::invalid_argument);
  }
}

TEST_CASE("ratio closed forms at p = 2") {
  const Exponent p2(2.0);
  SUBCASE("constant") {
    const RatioResult r = ratio(p2, TrigPolynomial{1.0, {}, {}}, opt);
    CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(r.rhs_raw == doctest::Approx(2 * kPi).epsilon(1e-11));
    CHECK(r.normalized == doctest::Approx(1.0 / kPi).epsilon(1e-11));
  }
  SUBCASE("first harmonic") {
    const RatioResult r = ratio(p2, TrigPolynomial{0.0, {1.0}, {0.0}}, opt);
    CHECK(r.lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(r.rhs_raw == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(r.normalized == doctest::Approx(2.0 / (3 * kPi)).epsilon(1e-10));
  }
  SUBCASE("second harmonic") {
    const RatioResult r =
        ratio(p2, TrigPolynomial{0.0, {0.0, 1.0}, {0.0, 0.0}}, opt);
    CHECK(r.lhs == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(r.rhs_raw == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(r.normalized == doctest::Approx(2.0 / (5 * kPi)).epsilon(1e-10));
  }
  SUBCASE("zero function is rejected") {
    CHECK_THROWS_AS(ratio(p2, TrigPolynomial{0.0, {0.0}, {0.0}}, opt),
                    ZeroFunctionError);
  }
}

TEST_CASE("ratio is scale invariant") {
  const SampleSpec spec{6, 10, 3, 1.0};
  const TrigPolynomial f = random_harmonic(spec, 2);
  for (double p : {1.25, 2.0, 4.0}) {
    const Exponent e(p);
    const RatioResult base = ratio(e, f, opt);
    for (double c : {2.7, -0.31}) {
      TrigPolynomial g = f;
      g.a0 *= c;
      for (double& v : g.cos_coeffs) v *= c;
      for (double& v : g.sin_coeffs) v *= c;
      const RatioResult scaled = ratio(e, g, opt);
      CHECK(std::abs(scaled.ratio - base.ratio) <= 1e-10 * base.ratio);
    }
  }
}

TEST_CASE("rotated boundary data still satisfies the bound") {
  const SampleSpec spec{8, 10, 21, 1.0};
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> sdist(0.0, 2 * kPi);
  for (int i = 0; i < 4; ++i) {
    const TrigPolynomial f = random_harmonic(spec, i);
    const double s = sdist(rng);
    for (double p : {1.25, 2.0, 8.0}) {
      const RatioResult r = ratio(Exponent(p), f.rotated(s), opt);
      CHECK(r.normalized <= 1.0 + 1e-8);
    }
  }
}

TEST_CASE("near-extremal family") {
  const Exponent p2(2.0);
  SUBCASE("domain validation") {
    CHECK_THROWS_AS(epsilon_ratio(p2, 0.0, opt), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_ratio(p2, 0.5, opt), std::invalid_argument);
    CHECK_THROWS_AS(epsilon_ratio(p2, -0.1, opt), std::invalid_argument);
  }
  SUBCASE("eps -> 1/p degenerates to the constant function") {
    const RatioResult r = epsilon_ratio(p2, 0.499999, opt);
    CHECK(std::abs(r.normalized - 1.0 / kPi) <= 1e-5);
  }
  SUBCASE("50-digit reference values at p = 2, eps = 0.1") {
    const RatioResult r = epsilon_ratio(p2, 0.1, opt);
    CHECK(r.lhs == doctest::Approx(6.2686531240860363).epsilon(1e-10));
    CHECK(r.rhs_raw == doctest::Approx(9.6449983445491378).epsilon(1e-10));
    CHECK(r.normalized == doctest::Approx(0.64993822706343543).epsilon(1e-10));
  }
  SUBCASE("deep singular member at p = 1.25, eps = 0.01") {
    const RatioResult r = epsilon_ratio(Exponent(1.25), 0.01, opt);
    CHECK(r.normalized == doctest::Approx(0.890460032524708).epsilon(1e-9));
    CHECK(r.normalized < 1.0);
  }
  SUBCASE("monotone approach at p = 4") {
    const Exponent p4(4.0);
    double prev = -1.0;
    for (double eps : {0.2, 0.1, 0.05, 0.02, 0.01}) {
      const double n = epsilon_ratio(p4, eps, opt).normalized;
      CHECK(n > prev);
      CHECK(n <= 1.0 + 1e-8);
      prev = n;
    }
  }
}

TEST_CASE("simplex search for the operator norm") {
  const QuadratureOptions search{1e-7, 2'000'000};
  SUBCASE("validation") {
    CHECK_THROWS_AS(maximize_ratio(Exponent(2.0), 0, 1000, 1, search),
                    std::invalid_argument);
    CHECK_THROWS_AS(maximize_ratio(Exponent(2.0), 2, 50, 1, search),
                    std::invalid_argument);
  }
  SUBCASE("deterministic restart") {
    const MaximizeOutcome a = maximize_ratio(Exponent(2.0), 2, 400, 9, search);
    const MaximizeOutcome b = maximize_ratio(Exponent(2.0), 2, 400, 9, search);
    CHECK(a.best.normalized == b.best.normalized);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.argmax.a0 == b.argmax.a0);
  }
  SUBCASE("never certifies a violation at degree 1") {
    const MaximizeOutcome m = maximize_ratio(Exponent(2.0), 1, 800, 4, search);
    CHECK(m.best.normalized <= 1.0 + 1e-6);
    CHECK(m.best.normalized > 0.1);  // it does find something nontrivial
  }
  SUBCASE("tiny budget reports exhaustion with a best-so-far") {
    const MaximizeOutcome m = maximize_ratio(Exponent(2.0), 3, 100, 2, search);
    CHECK(m.budget_exhausted);
    CHECK(m.evaluations <= 100);
    CHECK(std::isfinite(m.best.normalized));
  }
}
