#include "hardy/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hardy/parallel.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

void require_interior(double theta, const char* who) {
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw std::domain_error(std::string(who) + ": theta must lie in (0, pi)");
  }
}

// The radial integral without the (0, pi) restriction; symmetry_check
// evaluates it literally at theta + pi.
QuadratureResult lhs_schur_any(const Exponent& e, double theta,
                               const QuadratureOptions& opt) {
  const double c = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double q = e.inv();
  auto integrand = [c, s2, q](double r) {
    const double d = r - c;
    return std::pow(1.0 - r * r, q) / (d * d + s2);
  };
  const SingularityHint hints[] = {{-1.0, q}, {1.0, q}, {c, 0.0}};
  return integrate(integrand, -1.0, 1.0, opt, hints);
}

}  // namespace

QuadratureResult lhs_schur(const Exponent& e, double theta,
                           const QuadratureOptions& opt) {
  require_interior(theta, "lhs_schur");
  return lhs_schur_any(e, theta, opt);
}

double rhs_schur(const Exponent& e, double theta) {
  require_interior(theta, "rhs_schur");
  const double p = e.value();
  const double pm1_over_p = (p - 1.0) / p;
  return schur_constant(e) * std::pow(2.0, -pm1_over_p) *
         std::pow(std::sin(theta), -pm1_over_p) *
         std::pow(std::cos(e.half_angle() - theta * e.inv()), p - 1.0);
}

double pointwise_margin(const Exponent& e, double theta,
                        const QuadratureOptions& opt) {
  return rhs_schur(e, theta) - lhs_schur(e, theta, opt).value;
}

QuadratureResult profile_trig(const Exponent& e, double theta,
                              const QuadratureOptions& opt) {
  if (!(theta >= 0.0) || !(theta <= kPi)) {
    throw std::domain_error("profile_trig: theta must lie in [0, pi]");
  }
  const double q = e.inv();
  const double half = 0.5 * theta;
  auto integrand = [q, half](double x) {
    return std::pow(std::sin(x), q) * std::pow(std::cos(x), q) /
           std::pow(std::sin(x + half), 2.0 * q);
  };
  // At theta = 0 the denominator turns the origin exponent into -1/p; at
  // theta = pi the same happens at x = pi/2 (sin(x + pi/2) = cos x).
  const SingularityHint hints[] = {{0.0, theta == 0.0 ? -q : q},
                                   {0.5 * kPi, theta == kPi ? -q : q}};
  return integrate(integrand, 0.0, 0.5 * kPi, opt, hints);
}

QuadratureResult profile_halfline(const Exponent& e, double theta,
                                  const QuadratureOptions& opt) {
  if (!(theta >= 0.0) || !(theta <= kPi)) {
    throw std::domain_error("profile_halfline: theta must lie in [0, pi]");
  }
  const double q = e.inv();
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  auto integrand = [q, ch, sh](double y) {
    return std::pow(y, q) / ((y * y + 1.0) * std::pow(y * ch + sh, 2.0 * q));
  };
  const SingularityHint hints[] = {{0.0, theta == 0.0 ? -q : q}};
  return integrate_semi_infinite(integrand, opt, hints);
}

double profile_from_radial(const Exponent& e, double theta,
                           const QuadratureOptions& opt) {
  require_interior(theta, "profile_from_radial");
  const double pm1_over_p = (e.value() - 1.0) / e.value();
  return std::pow(2.0, -e.inv()) * std::pow(std::sin(theta), pm1_over_p) *
         lhs_schur(e, theta, opt).value;
}

double phi(const Exponent& e, double x, double theta) {
  const double q = e.inv();
  const double u = x + 0.5 * theta;
  const double su = std::sin(u);
  const double cu = std::cos(u);
  return std::pow(std::sin(x), q) * std::pow(std::cos(x), q) /
         std::pow(su, 2.0 + 2.0 * q) *
         ((1.0 + 2.0 * q) * cu * cu + su * su);
}

QuadratureResult profile_second_derivative(const Exponent& e, double theta,
                                           const QuadratureOptions& opt) {
  require_interior(theta, "profile_second_derivative");
  const double q = e.inv();
  auto integrand = [&e, theta](double x) { return phi(e, x, theta); };
  const SingularityHint hints[] = {{0.0, q}, {0.5 * kPi, q}};
  QuadratureResult result = integrate(integrand, 0.0, 0.5 * kPi, opt, hints);
  const double scale = 0.5 * e.inv();
  result.value *= scale;
  result.error_estimate *= scale;
  return result;
}

double symmetry_check(const Exponent& e, double theta,
                      const QuadratureOptions& opt) {
  require_interior(theta, "symmetry_check");
  return lhs_schur_any(e, theta + kPi, opt).value -
         lhs_schur_any(e, theta, opt).value;
}

std::pair<double, double> endpoint_check(const Exponent& e,
                                         const QuadratureOptions& opt) {
  const double bound = profile_bound(e);
  return {profile_trig(e, 0.0, opt).value - bound,
          profile_trig(e, kPi, opt).value - bound};
}

ProofGrid ProofGrid::standard(const Exponent& p, double tol) {
  return equispaced(p, 199, tol);
}

ProofGrid ProofGrid::equispaced(const Exponent& p, int n, double tol) {
  if (n < 3) throw std::invalid_argument("ProofGrid: need at least 3 points");
  std::vector<double> thetas;
  thetas.reserve(static_cast<std::size_t>(n) + 4);
  thetas.push_back(1e-3);
  thetas.push_back(1e-2);
  for (int k = 1; k <= n; ++k) {
    thetas.push_back(kPi * k / (n + 1.0));
  }
  thetas.push_back(kPi - 1e-2);
  thetas.push_back(kPi - 1e-3);
  std::sort(thetas.begin(), thetas.end());
  return ProofGrid{std::move(thetas), p, tol};
}

VerificationReport run_proof(const ProofGrid& grid, const ProofOptions& popt) {
  if (grid.thetas.empty() || grid.thetas.front() <= 0.0 ||
      grid.thetas.back() >= kPi) {
    throw std::invalid_argument("run_proof: grid must lie strictly inside (0, pi)");
  }
  const QuadratureOptions opt{grid.tol, QuadratureOptions{}.max_evaluations};
  const Exponent& e = grid.p;
  const double bound = popt.cp_scale * profile_bound(e);

  VerificationReport report;
  report.rows.resize(grid.thetas.size());
  parallel_for(grid.thetas.size(), [&](std::size_t i) {
    ProofRow& row = report.rows[i];
    row.theta = grid.thetas[i];
    try {
      const QuadratureResult lhs = lhs_schur(e, row.theta, opt);
      row.lhs = lhs.value;
      row.rhs = popt.cp_scale * rhs_schur(e, row.theta);
      row.margin = row.rhs - row.lhs;
      const QuadratureResult fx = profile_trig(e, row.theta, opt);
      const QuadratureResult fy = profile_halfline(e, row.theta, opt);
      const double fr = std::pow(2.0, -e.inv()) *
                        std::pow(std::sin(row.theta),
                                 (e.value() - 1.0) / e.value()) *
                        lhs.value;
      row.profile = fx.value;
      row.spread = std::max(std::abs(fx.value - fy.value),
                            std::abs(fx.value - fr));
      row.second_derivative = profile_second_derivative(e, row.theta, opt).value;
      row.error_estimate = lhs.error_estimate + fx.error_estimate +
                           fy.error_estimate;
    } catch (const QuadratureError&) {
      row.failed = true;
    }
  });

  report.worst_margin = std::numeric_limits<double>::infinity();
  report.worst_spread = 0.0;
  report.min_second_derivative = std::numeric_limits<double>::infinity();
  report.worst_profile_excess = -std::numeric_limits<double>::infinity();
  for (const ProofRow& row : report.rows) {
    if (row.failed) {
      ++report.quadrature_failures;
      continue;
    }
    report.worst_margin = std::min(report.worst_margin, row.margin);
    report.worst_spread = std::max(report.worst_spread, row.spread);
    report.min_second_derivative =
        std::min(report.min_second_derivative, row.second_derivative);
    report.worst_profile_excess =
        std::max(report.worst_profile_excess, row.profile - bound);
  }

  // Endpoint identity F(0) = F(pi) = bound; under the cp_scale hook the
  // claimed bound moves while F does not, which is exactly what a falsified
  // constant should trip.
  try {
    report.endpoint_residual_0 = profile_trig(e, 0.0, opt).value - bound;
    report.endpoint_residual_pi = profile_trig(e, kPi, opt).value - bound;
  } catch (const QuadratureError&) {
    ++report.quadrature_failures;
    report.endpoint_residual_0 = std::numeric_limits<double>::quiet_NaN();
    report.endpoint_residual_pi = std::numeric_limits<double>::quiet_NaN();
  }

  const double slack = popt.slack;
  report.passed = report.quadrature_failures == 0 &&
                  report.worst_margin >= -slack &&
                  report.worst_spread <= 1e-7 &&
                  report.min_second_derivative > 0.0 &&
                  report.worst_profile_excess <= slack &&
                  std::abs(report.endpoint_residual_0) <= slack &&
                  std::abs(report.endpoint_residual_pi) <= slack;
  return report;
}

}  // namespace hardy
