#pragma once

#include <utility>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

// Step-by-step verifier for the Schur-test argument. "Profile" refers to the
// single-variable function F(theta) obtained from the adjoint integral after
// the half-angle substitution; the argument reduces to F being convex on
// [0, pi] with both endpoint values equal to profile_bound(p).

/// Left side of the pointwise Schur inequality at angle theta in (0, pi):
/// the integral of (1-r^2)^(1/p) / (1 - 2 r cos(theta) + r^2) over [-1, 1].
QuadratureResult lhs_schur(const Exponent& e, double theta,
                           const QuadratureOptions& opt = {});

/// Right side in closed form:
/// C_p 2^(-(p-1)/p) sin(theta)^(-(p-1)/p) cos(pi/2p - theta/p)^(p-1).
double rhs_schur(const Exponent& e, double theta);

/// rhs_schur - lhs_schur; the inequality requires this to be >= 0.
double pointwise_margin(const Exponent& e, double theta,
                        const QuadratureOptions& opt = {});

/// F(theta) as the x-integral over [0, pi/2]:
/// sin^(1/p)x cos^(1/p)x / sin^(2/p)(x + theta/2). Valid on [0, pi].
QuadratureResult profile_trig(const Exponent& e, double theta,
                              const QuadratureOptions& opt = {});

/// F(theta) as the half-line integral:
/// y^(1/p) (y^2+1)^(-1) (y cos(theta/2) + sin(theta/2))^(-2/p). Valid on [0, pi].
QuadratureResult profile_halfline(const Exponent& e, double theta,
                                  const QuadratureOptions& opt = {});

/// F(theta) recovered from the radial integral:
/// 2^(-1/p) sin(theta)^((p-1)/p) lhs_schur(theta). Valid on (0, pi).
double profile_from_radial(const Exponent& e, double theta,
                           const QuadratureOptions& opt = {});

/// Integrand of the second derivative of the profile; strictly positive on
/// x in (0, pi/2), theta in (0, pi).
double phi(const Exponent& e, double x, double theta);

/// F''(theta) = 1/(2p) * integral of phi over [0, pi/2]. Diverges at the
/// endpoints theta in {0, pi}, which are rejected.
QuadratureResult profile_second_derivative(const Exponent& e, double theta,
                                           const QuadratureOptions& opt = {});

/// Residual of the r -> -r reduction: lhs_schur evaluated literally at
/// theta + pi minus lhs_schur at theta (an exact change of variables).
double symmetry_check(const Exponent& e, double theta,
                      const QuadratureOptions& opt = {});

/// Residuals of F(0) - B_p and F(pi) - B_p. Contract: within 10 * opt.tol.
std::pair<double, double> endpoint_check(const Exponent& e,
                                         const QuadratureOptions& opt = {});

struct ProofGrid {
  std::vector<double> thetas;  // strictly inside (0, pi), ascending
  Exponent p;
  double tol = 1e-10;

  /// 199 equispaced interior points pi*k/200 plus the near-singular stress
  /// set {1e-3, 1e-2, pi - 1e-2, pi - 1e-3}.
  static ProofGrid standard(const Exponent& p, double tol = 1e-10);
  /// n equispaced interior points pi*k/(n+1) plus the stress set.
  static ProofGrid equispaced(const Exponent& p, int n, double tol = 1e-10);
};

struct ProofRow {
  double theta = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double error_estimate = 0.0;
  double profile = 0.0;            // F(theta), x-representation
  double spread = 0.0;             // max pairwise gap of the three routes
  double second_derivative = 0.0;  // F''(theta)
  bool failed = false;             // quadrature failure; values unreliable
};

struct VerificationReport {
  std::vector<ProofRow> rows;
  double worst_margin = 0.0;
  double worst_spread = 0.0;
  double min_second_derivative = 0.0;
  double worst_profile_excess = 0.0;    // max F - (bound + 0), signed
  double endpoint_residual_0 = 0.0;     // F(0) - bound
  double endpoint_residual_pi = 0.0;    // F(pi) - bound
  int quadrature_failures = 0;
  bool passed = false;
};

struct ProofOptions {
  double slack = 1e-8;     // tolerance for every inequality check
  double cp_scale = 1.0;   // test hook: scales C_p and its derived bound
};

/// Sweeps the grid: pointwise margins, representation spreads, convexity,
/// the profile bound, and the endpoint identity. Per-row quadrature failures
/// are recorded without aborting the sweep. Rows run in parallel.
VerificationReport run_proof(const ProofGrid& grid, const ProofOptions& popt = {});

}  // namespace hardy
