#include "hardy/poisson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardy {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double TrigPolynomial::boundary(double theta) const {
  // cos/sin of n*theta by angle addition; degree is small.
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double cn = 1.0, sn = 0.0;
  double acc = a0;
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
    const double c = cn * c1 - sn * s1;
    const double s = sn * c1 + cn * s1;
    cn = c;
    sn = s;
    acc += cos_coeffs[k] * cn + sin_coeffs[k] * sn;
  }
  return acc;
}

double TrigPolynomial::extension(double r, double theta) const {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double cn = 1.0, sn = 0.0, rn = 1.0;
  double acc = a0;
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
    const double c = cn * c1 - sn * s1;
    const double s = sn * c1 + cn * s1;
    cn = c;
    sn = s;
    rn *= r;
    acc += rn * (cos_coeffs[k] * cn + sin_coeffs[k] * sn);
  }
  return acc;
}

double TrigPolynomial::diameter(double r) const {
  double acc = 0.0;
  for (std::size_t k = cos_coeffs.size(); k-- > 0;) {
    acc = acc * r + cos_coeffs[k];
  }
  return a0 + r * acc;
}

TrigPolynomial TrigPolynomial::rotated(double s) const {
  TrigPolynomial out;
  out.a0 = a0;
  out.cos_coeffs.resize(cos_coeffs.size());
  out.sin_coeffs.resize(sin_coeffs.size());
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
    const double ns = (static_cast<double>(k) + 1.0) * s;
    const double c = std::cos(ns), si = std::sin(ns);
    out.cos_coeffs[k] = cos_coeffs[k] * c + sin_coeffs[k] * si;
    out.sin_coeffs[k] = -cos_coeffs[k] * si + sin_coeffs[k] * c;
  }
  return out;
}

double TrigPolynomial::coefficient_norm() const {
  double acc = a0 * a0;
  for (double v : cos_coeffs) acc += v * v;
  for (double v : sin_coeffs) acc += v * v;
  return std::sqrt(acc);
}

bool TrigPolynomial::is_zero() const {
  if (a0 != 0.0) return false;
  for (double v : cos_coeffs) {
    if (v != 0.0) return false;
  }
  for (double v : sin_coeffs) {
    if (v != 0.0) return false;
  }
  return true;
}

double poisson_kernel(double r, double theta) {
  if (!(std::abs(r) < 1.0)) {
    throw std::invalid_argument("poisson_kernel: requires |r| < 1");
  }
  const double s = std::sin(theta);
  const double d = r - std::cos(theta);
  // 1 - 2 r cos(theta) + r^2 = (r - cos)^2 + sin^2, cancellation-free at the peak
  return (1.0 - r * r) / (d * d + s * s);
}

QuadratureResult extend(const BoundaryFunction& f, double r,
                        const QuadratureOptions& opt) {
  if (!(std::abs(r) < 1.0)) {
    throw std::invalid_argument("extend: requires |r| < 1");
  }
  auto integrand = [&f, r](double theta) {
    return poisson_kernel(r, theta) * f.eval(theta) / kTwoPi;
  };
  std::vector<SingularityHint> hints = f.hints;
  hints.push_back({kPi, 0.0});  // kernel peak for r < 0; harmless otherwise
  return integrate(integrand, 0.0, kTwoPi, opt, hints);
}

QuadratureResult adjoint(const std::function<double(double)>& g, double theta,
                         std::span<const SingularityHint> g_hints,
                         const QuadratureOptions& opt) {
  if (!(theta > 0.0 && theta < kTwoPi)) {
    throw std::invalid_argument("adjoint: theta == 0 mod 2pi (kernel not integrable)");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  auto integrand = [&g, c, s](double r) {
    const double d = r - c;
    return (1.0 - r * r) / (d * d + s * s) * g(r);
  };
  std::vector<SingularityHint> hints(g_hints.begin(), g_hints.end());
  hints.push_back({c, 0.0});
  return integrate(integrand, -1.0, 1.0, opt, hints);
}

double h_boundary(const Exponent& e, double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi) || theta == kPi) {
    throw std::domain_error("h_boundary: theta must lie in (0,pi) U (pi,2pi)");
  }
  const double q = e.inv();
  const double abs_sin = std::abs(std::sin(theta));
  const double reduced = theta < kPi ? theta : theta - kPi;
  return std::pow(2.0, -q) * std::pow(abs_sin, -q) *
         std::cos(e.half_angle() - reduced * q);
}

BoundaryFunction h_boundary_function(const Exponent& e) {
  const double exponent = -e.inv();
  BoundaryFunction f;
  f.eval = [e](double theta) { return h_boundary(e, theta); };
  f.hints = {{0.0, exponent}, {kPi, exponent}, {kTwoPi, exponent}};
  return f;
}

double re_power_interior(double q, std::complex<double> z) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::invalid_argument("re_power_interior: requires 0 < q < 1");
  }
  if (!(std::abs(z) < 1.0)) {
    throw std::invalid_argument("re_power_interior: requires |z| < 1");
  }
  const std::complex<double> w = 1.0 - z * z;
  return std::pow(w, -q).real();
}

double mean_value_check(const Exponent& e, double r,
                        const QuadratureOptions& opt) {
  const QuadratureResult ext = extend(h_boundary_function(e), r, opt);
  return ext.value - std::pow(1.0 - r * r, -e.inv());
}

}  // namespace hardy
