#include "hardy/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Standard normals via Box-Muller on splitmix64; fully specified, so the
// sample streams are identical across platforms and standard libraries.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : state_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return radius * std::cos(kTwoPi * u2);
  }

 private:
  double uniform() {  // in (0, 1]
    return static_cast<double>((splitmix64(state_) >> 11) + 1) * 0x1.0p-53;
  }
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Locate the kinks of |g|^p: sign scan on 4096 points plus bisection.
std::vector<SingularityHint> kink_hints(const std::function<double(double)>& g,
                                        double a, double b, double exponent) {
  constexpr int kScan = 4096;
  constexpr std::size_t kMaxRoots = 40;
  std::vector<SingularityHint> hints;
  double x0 = a;
  double g0 = g(x0);
  bool last_was_zero = g0 == 0.0;
  if (last_was_zero) hints.push_back({x0, exponent});
  for (int i = 1; i <= kScan; ++i) {
    const double x1 = a + (b - a) * i / kScan;
    const double g1 = g(x1);
    if (g1 == 0.0) {
      if (!last_was_zero) hints.push_back({x1, exponent});
      last_was_zero = true;
    } else {
      if (!last_was_zero && g0 * g1 < 0.0) {
        double lo = x0, hi = x1, flo = g0;
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = g(mid);
          if (fm == 0.0) {
            lo = hi = mid;
            break;
          }
          if (flo * fm < 0.0) {
            hi = mid;
          } else {
            lo = mid;
            flo = fm;
          }
        }
        hints.push_back({0.5 * (lo + hi), exponent});
      }
      last_was_zero = false;
    }
    x0 = x1;
    g0 = g1;
    if (hints.size() > kMaxRoots) return {};  // degenerate; |g|^p is 0 or wild
  }
  return hints;
}

}  // namespace

TrigPolynomial random_harmonic(const SampleSpec& spec, int index) {
  if (spec.degree < 0 || spec.count <= 0) {
    throw std::invalid_argument("random_harmonic: bad sample spec");
  }
  if (index < 0 || index >= spec.count) {
    throw std::invalid_argument("random_harmonic: index out of range");
  }
  NormalSource source(spec.seed +
                      0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1));
  TrigPolynomial f;
  f.a0 = source.next();
  f.cos_coeffs.resize(spec.degree);
  f.sin_coeffs.resize(spec.degree);
  for (int n = 1; n <= spec.degree; ++n) {
    const double scale = std::pow(1.0 + n, -spec.decay);
    f.cos_coeffs[n - 1] = scale * source.next();
    f.sin_coeffs[n - 1] = scale * source.next();
  }
  return f;
}

RatioResult ratio(const Exponent& e, const TrigPolynomial& f,
                  const QuadratureOptions& opt) {
  if (f.is_zero()) {
    throw ZeroFunctionError("ratio: the zero function has no ratio");
  }
  const double p = e.value();

  auto diam = [&f](double r) { return f.diameter(r); };
  auto lhs_integrand = [&f, p](double r) {
    return std::pow(std::abs(f.diameter(r)), p);
  };
  const std::vector<SingularityHint> lhs_hints = kink_hints(diam, -1.0, 1.0, p);
  const QuadratureResult lhs = integrate(lhs_integrand, -1.0, 1.0, opt, lhs_hints);

  auto bdry = [&f](double theta) { return f.boundary(theta); };
  auto rhs_integrand = [&f, p](double theta) {
    return std::pow(std::abs(f.boundary(theta)), p);
  };
  const std::vector<SingularityHint> rhs_hints =
      kink_hints(bdry, 0.0, kTwoPi, p);
  const QuadratureResult rhs = integrate(rhs_integrand, 0.0, kTwoPi, opt, rhs_hints);
  if (!(rhs.value > 0.0)) {
    throw ZeroFunctionError("ratio: boundary p-norm vanished");
  }

  RatioResult out;
  out.lhs = lhs.value;
  out.rhs_raw = rhs.value;
  out.ratio = lhs.value / rhs.value;
  out.normalized = out.ratio / sharp_constant(e);
  return out;
}

RatioResult epsilon_ratio(const Exponent& e, double eps,
                          const QuadratureOptions& opt) {
  if (!(eps > 0.0) || !(eps < e.inv())) {
    throw std::invalid_argument("epsilon_ratio: requires 0 < eps < 1/p");
  }
  const double p = e.value();
  const double q = e.inv() - eps;      // exponent of the family member
  const double alpha = eps * p - 1.0;  // singular exponent of |f|^p, in (-1, 0)

  auto lhs_integrand = [alpha](double r) {
    return std::pow(1.0 - r * r, alpha);
  };
  const SingularityHint lhs_hints[] = {{-1.0, alpha}, {1.0, alpha}};
  const QuadratureResult lhs = integrate(lhs_integrand, -1.0, 1.0, opt, lhs_hints);

  auto rhs_integrand = [alpha, q, p](double theta) {
    const double reduced = theta < kPi ? theta : theta - kPi;
    const double abs_sin = std::abs(std::sin(theta));
    return std::pow(2.0 * abs_sin, alpha) *
           std::pow(std::cos(q * (0.5 * kPi - reduced)), p);
  };
  const SingularityHint rhs_hints[] = {{0.0, alpha}, {kPi, alpha}, {kTwoPi, alpha}};
  const QuadratureResult rhs = integrate(rhs_integrand, 0.0, kTwoPi, opt, rhs_hints);

  RatioResult out;
  out.lhs = lhs.value;
  out.rhs_raw = rhs.value;
  out.ratio = lhs.value / rhs.value;
  out.normalized = out.ratio / sharp_constant(e);
  return out;
}

namespace {

struct BudgetExhausted {};

}  // namespace

MaximizeOutcome maximize_ratio(const Exponent& e, int degree, long budget,
                               std::uint64_t seed, const QuadratureOptions& opt) {
  if (degree < 1) {
    throw std::invalid_argument("maximize_ratio: requires degree >= 1");
  }
  if (budget < 100) {
    throw std::invalid_argument("maximize_ratio: requires budget >= 100");
  }
  const int n = 2 * degree + 1;
  const double minus_inf = -std::numeric_limits<double>::infinity();

  auto to_poly = [degree](const std::vector<double>& x) {
    TrigPolynomial f;
    f.a0 = x[0];
    f.cos_coeffs.assign(x.begin() + 1, x.begin() + 1 + degree);
    f.sin_coeffs.assign(x.begin() + 1 + degree, x.end());
    return f;
  };
  auto project = [](std::vector<double>& x) {
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) return false;
    for (double& v : x) v /= norm;
    return true;
  };

  MaximizeOutcome outcome;
  double best_value = minus_inf;
  std::vector<double> best_x;

  // Projects x onto the unit sphere, then evaluates the normalized ratio;
  // the zero vector is rejected at -inf without spending budget.
  auto evaluate = [&](std::vector<double>& x) -> double {
    if (!project(x)) return minus_inf;
    if (outcome.evaluations >= budget) throw BudgetExhausted{};
    ++outcome.evaluations;
    const double value = ratio(e, to_poly(x), opt).normalized;
    if (value > best_value) {
      best_value = value;
      best_x = x;
    }
    return value;
  };

  NormalSource source(seed);
  std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(n));
  std::vector<double> values(n + 1, minus_inf);
  for (double& v : simplex[0]) v = source.next();
  for (int i = 1; i <= n; ++i) {
    simplex[i] = simplex[0];
    simplex[i][i - 1] += 0.5;
  }

  try {
    for (int i = 0; i <= n; ++i) values[i] = evaluate(simplex[i]);

    for (;;) {
      std::vector<int> order(n + 1);
      for (int i = 0; i <= n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&values](int u, int v) { return values[u] > values[v]; });
      const int best = order[0];
      const int second_worst = order[n - 1];
      const int worst = order[n];

      if (values[best] - values[worst] < 1e-12) break;  // converged

      std::vector<double> centroid(n, 0.0);
      for (int i = 0; i <= n; ++i) {
        if (i == worst) continue;
        for (int k = 0; k < n; ++k) centroid[k] += simplex[i][k];
      }
      for (double& v : centroid) v /= n;

      auto step = [&](double coeff) {
        std::vector<double> x(n);
        for (int k = 0; k < n; ++k) {
          x[k] = centroid[k] + coeff * (centroid[k] - simplex[worst][k]);
        }
        return x;
      };

      std::vector<double> reflected = step(1.0);
      const double fr = evaluate(reflected);
      if (fr > values[best]) {
        std::vector<double> expanded = step(2.0);
        const double fe = evaluate(expanded);
        if (fe > fr) {
          simplex[worst] = std::move(expanded);
          values[worst] = fe;
        } else {
          simplex[worst] = std::move(reflected);
          values[worst] = fr;
        }
        continue;
      }
      if (fr > values[second_worst]) {
        simplex[worst] = std::move(reflected);
        values[worst] = fr;
        continue;
      }
      std::vector<double> contracted =
          fr > values[worst] ? step(0.5) : step(-0.5);
      const double fc = evaluate(contracted);
      if (fc > std::max(fr, values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = fc;
        continue;
      }
      // Shrink toward the best vertex.
      for (int i = 0; i <= n; ++i) {
        if (i == best) continue;
        for (int k = 0; k < n; ++k) {
          simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
        }
        values[i] = evaluate(simplex[i]);
      }
    }
  } catch (const BudgetExhausted&) {
    outcome.budget_exhausted = true;
  }

  if (best_x.empty()) {
    throw ZeroFunctionError("maximize_ratio: no feasible iterate evaluated");
  }
  outcome.argmax = to_poly(best_x);
  outcome.best = ratio(e, outcome.argmax, opt);
  return outcome;
}

}  // namespace hardy
