#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hardy {

/// Marks a point where the integrand behaves like |x - location|^exponent.
/// exponent must exceed -1 (integrability); exponent 0 requests a plain
/// split, used for sharp-but-integrable interior peaks.
struct SingularityHint {
  double location = 0.0;
  double exponent = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // upper-bound estimate of absolute error
  long evaluations = 0;
};

struct QuadratureOptions {
  double tol = 1e-10;               // absolute tolerance
  long max_evaluations = 2'000'000;  // integrand-call budget per integral
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Tolerance unreachable within the evaluation budget.
struct NonConvergence : QuadratureError {
  using QuadratureError::QuadratureError;
};
/// A hint with exponent <= -1: the integral diverges.
struct DivergentHint : QuadratureError {
  using QuadratureError::QuadratureError;
};
/// Integrand returned NaN/inf away from every hinted point.
struct NonFiniteIntegrand : QuadratureError {
  using QuadratureError::QuadratureError;
};

using Integrand = std::function<double(double)>;

/// Integrate f over [a, b]. The interval is pre-split at every interior hint.
/// Panels use the tanh-sinh transformation; an endpoint with a strictly
/// negative hint exponent is peeled off into a Gauss-Jacobi patch, which
/// integrates the singular factor analytically (the hint exponent is taken
/// as exact there). Positive exponents mark derivative singularities and
/// zero exponents plain splits; both stay on the tanh-sinh path.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opt = {},
                           std::span<const SingularityHint> hints = {});

/// Integrate f over (0, inf) for integrands with power-law decay, via the
/// reciprocal split at y = 1 (the tail maps to u = 1/y on (0, 1)). Hints are
/// given in y coordinates.
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureOptions& opt = {},
                                         std::span<const SingularityHint> hints = {});

/// Nodes and weights of the n-point Gauss-Jacobi rule on [-1, 1] for the
/// weight (1-x)^a (1+x)^b, a, b > -1. Exposed for tests.
struct JacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
JacobiRule gauss_jacobi(int n, double a, double b);

}  // namespace hardy
