#include "hardy/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "hardy/constants.hpp"
#include "hardy/experiments.hpp"
#include "hardy/parallel.hpp"
#include "hardy/poisson.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/report.hpp"
#include "hardy/schur.hpp"
#include "hardy/selftest.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

const char* format_name(RunConfig::Format f) {
  return f == RunConfig::Format::csv ? "csv" : "json";
}

JsonFields config_fields(const RunConfig& config, const std::vector<double>& p_grid) {
  return {
      {"command", json_string(command_name(config.command))},
      {"p_grid", json_number_array(p_grid)},
      {"theta_grid", format_integer(config.theta_grid)},
      {"tol", format_number(config.tol)},
      {"samples", format_integer(config.samples)},
      {"degree", format_integer(config.degree)},
      {"seed", format_unsigned(config.seed)},
      {"budget", format_integer(config.budget)},
      {"angle", format_number(config.angle)},
      {"format", json_string(format_name(config.format))},
  };
}

struct CommandOutput {
  Table table;
  JsonFields summary;
  bool passed = true;
};

CommandOutput run_constants(const RunConfig&, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"kp"}, {"cp"}, {"bp"}};
  for (double p : p_grid) {
    const SharpConstants sc = sharp_constants(Exponent(p));
    out.table.add_row({format_number(p), format_number(sc.kp),
                       format_number(sc.cp), format_number(sc.bp)});
  }
  out.summary = {{"passed", "true"}};
  return out;
}

CommandOutput run_schur(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"theta"}, {"lhs"}, {"rhs"}, {"margin"}, {"err"}};
  double worst_margin = std::numeric_limits<double>::infinity();
  bool all_passed = true;
  for (double p : p_grid) {
    const Exponent e(p);
    const ProofGrid grid = ProofGrid::equispaced(e, config.theta_grid, config.tol);
    const VerificationReport rep = run_proof(grid);
    all_passed = all_passed && rep.passed;
    worst_margin = std::min(worst_margin, rep.worst_margin);
    for (const ProofRow& row : rep.rows) {
      out.table.add_row({format_number(p), format_number(row.theta),
                         format_number(row.lhs), format_number(row.rhs),
                         format_number(row.margin),
                         format_number(row.error_estimate)});
    }
  }
  out.passed = all_passed;
  out.summary = {
      {"passed", all_passed ? "true" : "false"},
      {"worst_margin", format_number(worst_margin)},
  };
  return out;
}

CommandOutput run_convexity(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"theta"}, {"f2_phi"}, {"f2_fd"}, {"rel_diff"}};
  const QuadratureOptions f2_opt{config.tol, 2'000'000};
  // Finite differences divide by delta^2 = 1e-6; the profile values feeding
  // them need two extra orders of accuracy.
  const QuadratureOptions fd_opt{config.tol * 1e-2, 2'000'000};
  const double delta = 1e-3;
  double min_f2 = std::numeric_limits<double>::infinity();
  double worst_rel = 0.0;
  for (double p : p_grid) {
    const Exponent e(p);
    const ProofGrid grid = ProofGrid::equispaced(e, config.theta_grid, config.tol);
    std::vector<std::array<double, 3>> cells(grid.thetas.size());
    parallel_for(grid.thetas.size(), [&](std::size_t i) {
      const double theta = grid.thetas[i];
      const double f2 = profile_second_derivative(e, theta, f2_opt).value;
      const double fd = (profile_trig(e, theta + delta, fd_opt).value -
                         2.0 * profile_trig(e, theta, fd_opt).value +
                         profile_trig(e, theta - delta, fd_opt).value) /
                        (delta * delta);
      cells[i] = {f2, fd, std::abs(fd - f2) / std::abs(f2)};
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const double theta = grid.thetas[i];
      out.table.add_row({format_number(p), format_number(theta),
                         format_number(cells[i][0]), format_number(cells[i][1]),
                         format_number(cells[i][2])});
      min_f2 = std::min(min_f2, cells[i][0]);
      // The finite difference is well-conditioned away from the endpoints.
      if (theta > 0.25 && theta < kPi - 0.25) {
        worst_rel = std::max(worst_rel, cells[i][2]);
      }
    }
  }
  out.passed = min_f2 > 0.0 && worst_rel <= 1e-3;
  out.summary = {
      {"passed", out.passed ? "true" : "false"},
      {"min_f2", format_number(min_f2)},
      {"worst_interior_rel_diff", format_number(worst_rel)},
  };
  return out;
}

CommandOutput run_endpoints(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"theta"}, {"f_value"}, {"bound"}, {"residual"}, {"err"}};
  const QuadratureOptions opt{config.tol, 2'000'000};
  double worst = 0.0;
  for (double p : p_grid) {
    const Exponent e(p);
    const double bound = profile_bound(e);
    for (double theta : {0.0, kPi}) {
      const QuadratureResult f = profile_trig(e, theta, opt);
      const double residual = f.value - bound;
      worst = std::max(worst, std::abs(residual));
      out.table.add_row({format_number(p), format_number(theta),
                         format_number(f.value), format_number(bound),
                         format_number(residual), format_number(f.error_estimate)});
    }
  }
  out.passed = worst <= 1e-8;
  out.summary = {
      {"passed", out.passed ? "true" : "false"},
      {"worst_residual", format_number(worst)},
  };
  return out;
}

CommandOutput run_ratio_sweep(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"sample", CellKind::integer}, {"lhs"},
                       {"rhs_raw"}, {"normalized"}};
  const QuadratureOptions opt{config.tol, 2'000'000};
  const SampleSpec spec{config.degree, config.samples, config.seed, 1.0};
  double worst = -std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    const Exponent e(p);
    std::vector<RatioResult> results(spec.count);
    parallel_for(static_cast<std::size_t>(spec.count), [&](std::size_t i) {
      TrigPolynomial f = random_harmonic(spec, static_cast<int>(i));
      if (config.angle != 0.0) f = f.rotated(config.angle);
      results[i] = ratio(e, f, opt);
    });
    for (int i = 0; i < spec.count; ++i) {
      const RatioResult& r = results[i];
      worst = std::max(worst, r.normalized);
      out.table.add_row({format_number(p), format_integer(i),
                         format_number(r.lhs), format_number(r.rhs_raw),
                         format_number(r.normalized)});
    }
  }
  out.passed = worst <= 1.0 + 1e-8;
  out.summary = {
      {"passed", out.passed ? "true" : "false"},
      {"max_normalized", format_number(worst)},
  };
  return out;
}

CommandOutput run_epsilon_sweep(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"eps"}, {"normalized"}};
  const QuadratureOptions opt{config.tol, 2'000'000};
  const double sweep[] = {0.2, 0.1, 0.05, 0.02, 0.01};
  bool passed = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    const Exponent e(p);
    double prev = -std::numeric_limits<double>::infinity();
    for (double eps : sweep) {
      if (!(eps < e.inv())) continue;  // family requires eps < 1/p
      const double normalized = epsilon_ratio(e, eps, opt).normalized;
      worst = std::max(worst, normalized);
      passed = passed && normalized > prev && normalized <= 1.0 + 1e-8;
      prev = normalized;
      out.table.add_row({format_number(p), format_number(eps),
                         format_number(normalized)});
    }
  }
  out.passed = passed;
  out.summary = {
      {"passed", passed ? "true" : "false"},
      {"max_normalized", format_number(worst)},
  };
  return out;
}

CommandOutput run_maximize(const RunConfig& config, const std::vector<double>& p_grid) {
  CommandOutput out;
  out.table.columns = {{"p"}, {"seed", CellKind::integer},
                       {"evaluations", CellKind::integer}, {"best_normalized"}};
  const QuadratureOptions opt{config.tol, 2'000'000};
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<MaximizeOutcome> outcomes(p_grid.size());
  parallel_for(p_grid.size(), [&](std::size_t i) {
    outcomes[i] = maximize_ratio(Exponent(p_grid[i]), config.degree,
                                 config.budget, config.seed, opt);
  });
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const MaximizeOutcome& m = outcomes[i];
    worst = std::max(worst, m.best.normalized);
    out.table.add_row({format_number(p_grid[i]), format_unsigned(config.seed),
                       format_integer(m.evaluations),
                       format_number(m.best.normalized)});
  }
  out.passed = worst <= 1.0 + 1e-6;
  out.summary = {
      {"passed", out.passed ? "true" : "false"},
      {"max_normalized", format_number(worst)},
  };
  return out;
}

}  // namespace

const char* command_name(RunConfig::Command c) {
  switch (c) {
    case RunConfig::Command::constants: return "constants";
    case RunConfig::Command::schur: return "schur";
    case RunConfig::Command::convexity: return "convexity";
    case RunConfig::Command::endpoints: return "endpoints";
    case RunConfig::Command::ratio_sweep: return "ratio-sweep";
    case RunConfig::Command::epsilon_sweep: return "epsilon-sweep";
    case RunConfig::Command::maximize: return "maximize";
    case RunConfig::Command::selftest: return "selftest";
  }
  return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<double> p_grid = config.p_grid;
  if (p_grid.empty()) p_grid = default_p_grid();

  // Validate the whole configuration up front: usage errors exit with 3.
  try {
    for (double p : p_grid) static_cast<void>(Exponent(p));
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (config.theta_grid < 3) throw std::invalid_argument("theta grid too small");
    if (config.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (config.degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (config.command == RunConfig::Command::maximize) {
      if (config.degree < 1) throw std::invalid_argument("maximize needs degree >= 1");
      if (config.budget < 100) throw std::invalid_argument("maximize needs budget >= 100");
    }
  } catch (const std::exception& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 3;
  }

  if (config.command == RunConfig::Command::selftest) {
    const std::vector<CriterionResult> results = run_acceptance(out);
    return all_passed(results) ? 0 : 1;
  }

  CommandOutput result;
  try {
    switch (config.command) {
      case RunConfig::Command::constants:
        result = run_constants(config, p_grid);
        break;
      case RunConfig::Command::schur:
        result = run_schur(config, p_grid);
        break;
      case RunConfig::Command::convexity:
        result = run_convexity(config, p_grid);
        break;
      case RunConfig::Command::endpoints:
        result = run_endpoints(config, p_grid);
        break;
      case RunConfig::Command::ratio_sweep:
        result = run_ratio_sweep(config, p_grid);
        break;
      case RunConfig::Command::epsilon_sweep:
        result = run_epsilon_sweep(config, p_grid);
        break;
      case RunConfig::Command::maximize:
        result = run_maximize(config, p_grid);
        break;
      case RunConfig::Command::selftest:
        break;  // handled above
    }
  } catch (const QuadratureError& ex) {
    err << "numerical failure: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "usage error: " << ex.what() << "\n";
    return 3;
  }

  std::ostringstream body;
  if (config.format == RunConfig::Format::csv) {
    write_csv(body, result.table);
  } else {
    write_json(body, config_fields(config, p_grid), result.table, result.summary);
  }

  if (config.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open output file: " << config.output << "\n";
      return 3;
    }
    file << body.str();
    if (!file) {
      err << "usage error: failed writing output file: " << config.output << "\n";
      return 3;
    }
  }
  return result.passed ? 0 : 1;
}

}  // namespace hardy
