#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hardy {

struct RunConfig {
  enum class Command {
    constants,
    schur,
    convexity,
    endpoints,
    ratio_sweep,
    epsilon_sweep,
    maximize,
    selftest,
  };
  enum class Format { csv, json };

  Command command = Command::constants;
  std::vector<double> p_grid;  // empty means the default grid
  int theta_grid = 199;
  double tol = 1e-10;
  int samples = 1000;
  int degree = 8;
  std::uint64_t seed = 42;
  long budget = 50000;
  double angle = 0.0;  // rotates boundary data in ratio-sweep
  Format format = Format::csv;
  std::string output;  // empty writes to stdout
};

/// Exit codes: 0 all checks pass; 1 a mathematical check failed; 2 numerical
/// failure (quadrature did not converge); 3 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

const char* command_name(RunConfig::Command c);

}  // namespace hardy
