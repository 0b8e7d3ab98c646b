#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hardy/constants.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

/// A function on the unit circle, parametrized by the angle in [0, 2pi),
/// together with quadrature hints for its singular points.
struct BoundaryFunction {
  std::function<double(double)> eval;
  std::vector<SingularityHint> hints;
};

/// Finite harmonic expansion a0 + sum_n r^n (a_n cos n*theta + b_n sin n*theta).
/// The sampling family for the ratio experiments.
struct TrigPolynomial {
  double a0 = 0.0;
  std::vector<double> cos_coeffs;  // index k holds the coefficient of n = k+1
  std::vector<double> sin_coeffs;  // same length as cos_coeffs

  int degree() const { return static_cast<int>(cos_coeffs.size()); }
  double boundary(double theta) const;
  double extension(double r, double theta) const;
  /// Value along the horizontal diameter, z = r in (-1, 1): a0 + sum a_n r^n.
  double diameter(double r) const;
  /// Boundary data rotated by angle s (the theorem at angle s reduces to
  /// angle 0 for the rotated polynomial).
  TrigPolynomial rotated(double s) const;
  double coefficient_norm() const;
  bool is_zero() const;
};

/// (1 - r^2) / (1 - 2 r cos(theta) + r^2), |r| < 1.
double poisson_kernel(double r, double theta);

/// Poisson integral of f against the normalized measure d(theta)/2pi,
/// evaluated on the diameter at radius r, |r| < 1.
QuadratureResult extend(const BoundaryFunction& f, double r,
                        const QuadratureOptions& opt = {});

/// The adjoint: integral over the diameter against plain dr on [-1, 1],
/// evaluated at boundary angle theta. A split at r = cos(theta) (where the
/// kernel peaks) is inserted automatically. Rejects theta == 0 mod 2pi.
QuadratureResult adjoint(const std::function<double(double)>& g, double theta,
                         std::span<const SingularityHint> g_hints = {},
                         const QuadratureOptions& opt = {});

/// Boundary values of the certificate function Re(1 - z^2)^(-1/p):
/// 2^(-1/p) |sin theta|^(-1/p) cos(pi/2p - theta/p) on (0, pi), and the
/// companion expression with theta - pi on (pi, 2pi). Infinite at 0 and pi.
double h_boundary(const Exponent& e, double theta);

/// The certificate packaged with its singularity hints at {0, pi, 2pi}.
BoundaryFunction h_boundary_function(const Exponent& e);

/// Re (1 - z^2)^(-q) for |z| < 1, 0 < q < 1, principal branch
/// (well-defined: Re(1 - z^2) >= 1 - |z|^2 > 0 on the disk).
double re_power_interior(double q, std::complex<double> z);

/// extend(h_boundary, r) minus the closed form (1 - r^2)^(-1/p).
/// Contract: |residual| <= 10 * opt.tol.
double mean_value_check(const Exponent& e, double r,
                        const QuadratureOptions& opt = {});

}  // namespace hardy
