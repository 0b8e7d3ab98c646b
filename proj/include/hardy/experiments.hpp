#pragma once

#include <cstdint>
#include <stdexcept>

#include "hardy/constants.hpp"
#include "hardy/poisson.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// Deterministic sampling plan for random trig polynomials: coefficients are
/// i.i.d. standard normal scaled by (1+n)^(-decay), reproducible from
/// (seed, index).
struct SampleSpec {
  int degree = 8;
  int count = 1000;
  std::uint64_t seed = 42;
  double decay = 1.0;
};

/// Both sides of the diameter-vs-boundary inequality for one function.
/// The theorem asserts normalized <= 1.
struct RatioResult {
  double lhs = 0.0;        // integral of |f|^p over the diameter
  double rhs_raw = 0.0;    // integral of |f*|^p over the circle, raw d(theta)
  double ratio = 0.0;      // lhs / rhs_raw
  double normalized = 0.0; // ratio / K_p
};

struct ZeroFunctionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

TrigPolynomial random_harmonic(const SampleSpec& spec, int index);

RatioResult ratio(const Exponent& e, const TrigPolynomial& f,
                  const QuadratureOptions& opt = {});

/// Ratio for the near-extremal family Re(1 - z^2)^(-(1/p) + eps), evaluated
/// from closed-form boundary and diameter expressions. Requires 0 < eps < 1/p.
RatioResult epsilon_ratio(const Exponent& e, double eps,
                          const QuadratureOptions& opt = {});

struct MaximizeOutcome {
  RatioResult best;
  TrigPolynomial argmax;
  long evaluations = 0;
  bool budget_exhausted = false;
};

/// Derivative-free simplex search (Nelder-Mead, coefficients 1, 2, 0.5, 0.5)
/// over the 2*degree+1 expansion coefficients, maximizing the normalized
/// ratio. Iterates are projected to unit coefficient norm (the ratio is
/// scale-invariant). Deterministic for a fixed seed.
MaximizeOutcome maximize_ratio(const Exponent& e, int degree, long budget,
                               std::uint64_t seed,
                               const QuadratureOptions& opt = {});

}  // namespace hardy
