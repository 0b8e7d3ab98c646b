#include "hardy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hardy/constants.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Endpoints with a strictly negative hint exponent are handled by a
// Gauss-Jacobi patch instead of tanh-sinh. Two double-precision effects rule
// tanh-sinh out there: the node x = B - d quantizes d to multiples of
// ulp(B), corrupting d^alpha for alpha < 0 once d is below ~1e-12, and for
// alpha near -1 the sliver closer than ~1e-300 (unreachable in doubles)
// still carries mass ~ d^(1+alpha). The Jacobi weight integrates the
// singular factor analytically, with nodes at exact, moderate distances.

// tanh-sinh abscissas t in [-kTmax, kTmax]; beyond that the node distance
// underflows.
constexpr double kTmax = 6.1;
constexpr int kMaxLevel = 12;
constexpr int kMaxDepth = 45;

struct Workspace {
  const Integrand* f = nullptr;
  std::vector<double> guards;  // abscissas where a non-finite value is forgiven
  long evals = 0;
  long budget = 0;
};

double eval_integrand(Workspace& ws, double x) {
  if (ws.evals >= ws.budget) {
    throw NonConvergence("integrate: evaluation budget of " +
                         std::to_string(ws.budget) + " exhausted");
  }
  ++ws.evals;
  const double v = (*ws.f)(x);
  if (!std::isfinite(v)) {
    for (double g : ws.guards) {
      if (std::abs(x - g) <= 8.0 * kEps * (1.0 + std::abs(g))) {
        return 0.0;  // unresolvable sliver next to a hinted singularity
      }
    }
    throw NonFiniteIntegrand("integrate: non-finite integrand value at x = " +
                             std::to_string(x));
  }
  return v;
}

struct PieceOut {
  double value = 0.0;
  double error = 0.0;
  double abssum = 0.0;
};

// Double-exponential rule on [A, B]. Handles endpoint algebraic/log
// singularities with exponent > kDeepExponent, bisecting on slow convergence
// (interior peaks without hints).
PieceOut tanh_sinh_panel(Workspace& ws, double A, double B, double tol,
                         int depth) {
  if (depth > kMaxDepth) {
    throw NonConvergence("integrate: bisection depth exhausted");
  }
  const double s = 0.5 * (B - A);
  const double c = 0.5 * (A + B);
  if (s <= 0.0 || !(B > A)) return {};

  // One node of the transformed rule. t >= 0; side +1 maps toward B, -1
  // toward A. Node distance from the endpoint and the weight are computed
  // from q = exp(-pi*sinh t) without cancellation or overflow.
  auto node_term = [&](double t, int side) -> double {
    const double u = 0.5 * kPi * std::sinh(t);
    const double q = std::exp(-2.0 * u);
    if (q == 0.0) return 0.0;
    const double delta = s * 2.0 * q / (1.0 + q);
    const double w = s * 0.5 * kPi * std::cosh(t) * 4.0 * q /
                     ((1.0 + q) * (1.0 + q));
    if (delta == 0.0 || w == 0.0) return 0.0;
    double x;
    if (t == 0.0) {
      x = c;
    } else {
      x = (side > 0) ? B - delta : A + delta;
    }
    if (x <= A || x >= B) return 0.0;  // rounding collapsed onto the endpoint
    return w * eval_integrand(ws, x);
  };
  double h = 1.0;
  double sum = 0.0;
  double abssum = 0.0;
  double tail = 0.0;  // outermost-node terms: truncation indicator; stays
                      // large when the integrand diverges at an endpoint
  {
    double v = node_term(0.0, +1);
    sum += v;
    abssum += std::abs(v);
    const int kmax = static_cast<int>(kTmax / h);
    for (int k = 1; k <= kmax; ++k) {
      const double vp = node_term(k * h, +1);
      const double vm = node_term(k * h, -1);
      sum += vp + vm;
      abssum += std::abs(vp) + std::abs(vm);
      if (k + 2 > kmax) tail = std::max({tail, std::abs(vp), std::abs(vm)});
    }
  }
  double integral_prev2 = std::numeric_limits<double>::quiet_NaN();
  double integral_prev = sum * h;

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    tail = 0.0;
    const int kmax = static_cast<int>(kTmax / h);
    for (int k = 1; k <= kmax; k += 2) {
      const double vp = node_term(k * h, +1);
      const double vm = node_term(k * h, -1);
      sum += vp + vm;
      abssum += std::abs(vp) + std::abs(vm);
      if (k + 4 > kmax) tail = std::max({tail, std::abs(vp), std::abs(vm)});
    }
    const double integral = sum * h;
    const double err = std::abs(integral - integral_prev);
    const double floor = 8.0 * kEps * abssum * h;
    const double accept = std::max(tol, floor);
    if (level >= 3 && err <= accept &&
        std::abs(integral - integral_prev2) <= 4.0 * accept && tail <= accept) {
      return {integral, std::max(err, 4.0 * floor), abssum * h};
    }
    integral_prev2 = integral_prev;
    integral_prev = integral;
  }

  // Levels exhausted: structure finer than node clustering resolves from
  // these endpoints. Bisect and recurse.
  const double mid = c;
  PieceOut left = tanh_sinh_panel(ws, A, mid, 0.5 * tol, depth + 1);
  PieceOut right = tanh_sinh_panel(ws, mid, B, 0.5 * tol, depth + 1);
  return {left.value + right.value, left.error + right.error,
          left.abssum + right.abssum};
}

// Gauss-Jacobi patch over [endpoint, endpoint + side*width] for an integrand
// f(x) = |x - endpoint|^alpha * g(x) with g smooth. The singular factor is
// integrated analytically through the Jacobi weight, so the mass next to the
// endpoint is captured even when alpha is close to -1.
struct PatchOut {
  double value = 0.0;
  double error = 0.0;
  double abssum = 0.0;
  double width = 0.0;
};

PatchOut jacobi_patch(Workspace& ws, double endpoint, int side, double max_width,
                      double alpha, double tol) {
  static const int ladder[] = {12, 20, 32, 48};
  double width = max_width;
  for (int shrink = 0; shrink < 24; ++shrink) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    double abssum = 0.0;
    bool converged = false;
    double err = std::numeric_limits<double>::infinity();
    for (int n : ladder) {
      const JacobiRule rule = gauss_jacobi(n, 0.0, alpha);
      const double half = 0.5 * width;
      const double scale = std::pow(half, alpha + 1.0);
      double acc = 0.0;
      double absacc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double dist = half * (1.0 + rule.nodes[i]);
        const double x = endpoint + side * dist;
        const double g = eval_integrand(ws, x) * std::pow(dist, -alpha);
        acc += rule.weights[i] * g;
        absacc += std::abs(rule.weights[i] * g);
      }
      value = scale * acc;
      abssum = scale * absacc;
      if (!std::isnan(prev)) {
        err = std::abs(value - prev);
        const double floor = 8.0 * kEps * abssum;
        if (err <= std::max(tol, floor)) {
          converged = true;
          break;
        }
      }
      prev = value;
    }
    if (converged) {
      return {value, std::max(err, 32.0 * kEps * abssum), abssum, width};
    }
    width *= 0.25;
    if (width < 1e-8 * max_width) break;
  }
  throw NonConvergence("integrate: Gauss-Jacobi endpoint patch did not converge");
}

struct Breakpoint {
  double x;
  double exponent;
  bool singular;
};

QuadratureResult integrate_with_guards(const Integrand& f, double a, double b,
                                       const QuadratureOptions& opt,
                                       std::span<const SingularityHint> hints,
                                       std::vector<double> extra_guards) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("integrate: requires finite a < b");
  }
  if (!(opt.tol > 0.0)) {
    throw std::invalid_argument("integrate: requires tol > 0");
  }
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  const double close = 1e-13 * scale;

  Breakpoint left{a, 0.0, false};
  Breakpoint right{b, 0.0, false};
  std::vector<Breakpoint> interior;
  std::vector<double> guards = std::move(extra_guards);
  for (const SingularityHint& h : hints) {
    if (!std::isfinite(h.location)) {
      throw std::invalid_argument("integrate: non-finite hint location");
    }
    if (h.location < a - close || h.location > b + close) continue;
    if (h.exponent <= -1.0) {
      throw DivergentHint("integrate: hint exponent " +
                          std::to_string(h.exponent) + " <= -1 at x = " +
                          std::to_string(h.location));
    }
    guards.push_back(h.location);
    if (std::abs(h.location - a) <= close) {
      left.exponent = left.singular ? std::min(left.exponent, h.exponent)
                                    : h.exponent;
      left.singular = true;
    } else if (std::abs(h.location - b) <= close) {
      right.exponent = right.singular ? std::min(right.exponent, h.exponent)
                                      : h.exponent;
      right.singular = true;
    } else {
      interior.push_back({h.location, h.exponent, true});
    }
  }
  std::sort(interior.begin(), interior.end(),
            [](const Breakpoint& u, const Breakpoint& v) { return u.x < v.x; });
  std::vector<Breakpoint> pts;
  pts.push_back(left);
  for (const Breakpoint& bp : interior) {
    if (!pts.empty() && std::abs(bp.x - pts.back().x) <= close) {
      pts.back().exponent = std::min(pts.back().exponent, bp.exponent);
      pts.back().singular = true;
    } else {
      pts.push_back(bp);
    }
  }
  if (pts.size() > 1 && std::abs(pts.back().x - right.x) <= close) {
    if (pts.back().singular) {
      right.exponent = right.singular
                           ? std::min(right.exponent, pts.back().exponent)
                           : pts.back().exponent;
      right.singular = true;
    }
    pts.pop_back();
  }
  pts.push_back(right);

  Workspace ws;
  ws.f = &f;
  ws.guards = std::move(guards);
  ws.budget = opt.max_evaluations;

  const std::size_t npanels = pts.size() - 1;
  const double tol_panel = opt.tol / static_cast<double>(npanels);

  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < npanels; ++i) {
    const Breakpoint& L = pts[i];
    const Breakpoint& R = pts[i + 1];
    double inner_a = L.x;
    double inner_b = R.x;
    const double panel_width = R.x - L.x;
    const bool deep_left = L.singular && L.exponent < 0.0;
    const bool deep_right = R.singular && R.exponent < 0.0;
    const int pieces = 1 + (deep_left ? 1 : 0) + (deep_right ? 1 : 0);
    const double tol_piece = tol_panel / pieces;
    if (deep_left) {
      PatchOut patch = jacobi_patch(ws, L.x, +1,
                                    std::min(0.3 * panel_width, 0.5),
                                    L.exponent, tol_piece);
      value += patch.value;
      error += patch.error;
      inner_a = L.x + patch.width;
    }
    if (deep_right) {
      PatchOut patch = jacobi_patch(ws, R.x, -1,
                                    std::min(0.3 * panel_width, 0.5),
                                    R.exponent, tol_piece);
      value += patch.value;
      error += patch.error;
      inner_b = R.x - patch.width;
    }
    PieceOut mid = tanh_sinh_panel(ws, inner_a, inner_b, tol_piece, 0);
    value += mid.value;
    error += mid.error;
  }
  return {value, error, ws.evals};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opt,
                           std::span<const SingularityHint> hints) {
  return integrate_with_guards(f, a, b, opt, hints, {});
}

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureOptions& opt,
                                         std::span<const SingularityHint> hints) {
  // Reciprocal split: the integral over (1, inf) becomes the u = 1/y
  // integral over (0, 1). Both halves then carry their hard behavior at the
  // origin, where node coordinates are exact.
  std::vector<SingularityHint> near_hints;
  std::vector<SingularityHint> far_hints = {{0.0, 0.0}};  // guard at u = 0
  for (const SingularityHint& h : hints) {
    if (h.location < 0.0) {
      throw std::invalid_argument("integrate_semi_infinite: hint location < 0");
    }
    if (h.exponent <= -1.0) {
      throw DivergentHint("integrate_semi_infinite: hint exponent <= -1");
    }
    if (h.location <= 1.0) near_hints.push_back(h);
    if (h.location >= 1.0) far_hints.push_back({1.0 / h.location, h.exponent});
  }
  QuadratureOptions half = opt;
  half.tol = 0.5 * opt.tol;
  const QuadratureResult lower = integrate(f, 0.0, 1.0, half, near_hints);

  auto tail = [&f](double u) -> double {
    const double fy = f(1.0 / u);
    if (fy == 0.0) return 0.0;
    const long double inv = 1.0L / static_cast<long double>(u);
    return static_cast<double>(static_cast<long double>(fy) * inv * inv);
  };
  half.max_evaluations = opt.max_evaluations - lower.evaluations;
  const QuadratureResult upper =
      integrate_with_guards(tail, 0.0, 1.0, half, far_hints, {});

  return {lower.value + upper.value,
          lower.error_estimate + upper.error_estimate,
          lower.evaluations + upper.evaluations};
}

JacobiRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1 required");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1");
  }
  const double ab = a + b;
  std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
  z[0] = 1.0;
  d[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double two_k = 2.0 * k;
    d[k] = (b * b - a * a) / ((two_k + ab) * (two_k + ab + 2.0));
    const double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
    const double den = (two_k + ab) * (two_k + ab) * (two_k + ab + 1.0) *
                       (two_k + ab - 1.0);
    e[k - 1] = std::sqrt(num / den);
  }
  const double mu0 = std::pow(2.0, ab + 1.0) * beta_function(a + 1.0, b + 1.0);

  // Implicit-shift QL on the symmetric tridiagonal (Golub-Welsch), carrying
  // the first row of the eigenvector matrix in z.
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) {
          throw std::runtime_error("gauss_jacobi: eigenvalue iteration failed");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflowed = false;
        for (int i = m - 1; i >= l; --i) {
          double fi = s * e[i];
          const double bi = c * e[i];
          r = std::hypot(fi, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflowed = true;
            break;
          }
          s = fi / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bi;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bi;
          fi = z[i + 1];
          z[i + 1] = s * z[i] + c * fi;
          z[i] = c * z[i] - s * fi;
        }
        if (underflowed) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int u, int v) { return d[u] < d[v]; });
  JacobiRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = d[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

}  // namespace hardy
