#include "hardy/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardy {

namespace {
constexpr double kPi = std::numbers::pi;
}

Exponent::Exponent(double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw std::invalid_argument("Exponent: requires finite p > 1");
  }
  p_ = p;
  inv_p_ = 1.0 / p;
  half_angle_ = kPi / (2.0 * p);
}

double sharp_constant(const Exponent& e) {
  return 1.0 / (2.0 * std::pow(std::cos(e.half_angle()), e.value()));
}

double schur_constant(const Exponent& e) { return 2.0 * kPi * sharp_constant(e); }

double profile_bound(const Exponent& e) {
  return kPi / (2.0 * std::cos(e.half_angle()));
}

SharpConstants sharp_constants(const Exponent& e) {
  const double kp = sharp_constant(e);
  return SharpConstants{kp, 2.0 * kPi * kp, profile_bound(e)};
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument("log_gamma: requires x > 0");
  }
  // One downward recurrence step keeps the Lanczos core on x >= 0.5.
  if (x < 0.5) {
    return log_gamma(x + 1.0) - std::log(x);
  }
  static const double coeff[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double series = coeff[0];
  for (int k = 1; k < 9; ++k) {
    series += coeff[k] / (z + k);
  }
  const double t = z + 7.5;  // g + 1/2
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("beta_function: requires a, b > 0");
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

const std::vector<double>& default_p_grid() {
  static const std::vector<double> grid = {1.05, 1.1, 1.25, 1.5, 2.0,
                                           3.0,  4.0, 8.0,  16.0};
  return grid;
}

}  // namespace hardy
