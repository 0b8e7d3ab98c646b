#pragma once

#include <vector>

namespace hardy {

/// Validated integrability exponent. The whole theory lives on 1 < p < inf;
/// everything downstream takes this type instead of a raw double.
class Exponent {
 public:
  explicit Exponent(double p);

  double value() const { return p_; }
  double inv() const { return inv_p_; }          // 1/p
  double half_angle() const { return half_angle_; }  // pi/(2p), in (0, pi/2)

 private:
  double p_;
  double inv_p_;
  double half_angle_;
};

/// The three closed-form constants attached to an exponent:
///   kp — sharp diameter-vs-boundary constant, 1/(2 cos^p(pi/2p));
///   cp — Schur-test constant for the normalized circle, exactly 2*pi*kp;
///   bp — upper bound for the reduced profile, pi/(2 cos(pi/2p)).
struct SharpConstants {
  double kp;
  double cp;
  double bp;
};

SharpConstants sharp_constants(const Exponent& e);

double sharp_constant(const Exponent& e);  // K_p
double schur_constant(const Exponent& e);  // C_p = 2*pi*K_p
double profile_bound(const Exponent& e);   // B_p = pi/(2 cos(pi/2p))

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms);
/// relative error below 1e-13 on [0.05, 50].
double log_gamma(double x);

/// Euler Beta function B(a, b) for a, b > 0, via log_gamma.
double beta_function(double a, double b);

/// The exponents the test sweeps run over.
const std::vector<double>& default_p_grid();

}  // namespace hardy
