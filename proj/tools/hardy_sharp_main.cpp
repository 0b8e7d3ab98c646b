#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardy/cli.hpp"

namespace {

void add_common(CLI::App* cmd, hardy::RunConfig& config, std::string& format) {
  cmd->add_option("--p", config.p_grid,
                  "Exponent(s) p > 1; repeatable or comma separated")
      ->delimiter(',');
  cmd->add_option("--p-grid", config.p_grid,
                  "Alias for --p; empty means the built-in grid")
      ->delimiter(',');
  cmd->add_option("--tol", config.tol, "Absolute quadrature tolerance");
  cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", config.output, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hardy-sharp: numerical verification of the sharp diameter-vs-boundary\n"
      "inequality for harmonic functions on the unit disk"};
  app.require_subcommand(1);

  hardy::RunConfig config;
  std::string format = "csv";

  CLI::App* constants = app.add_subcommand(
      "constants", "Closed-form constants K_p, C_p, B_p over the p grid");
  CLI::App* schur = app.add_subcommand(
      "schur", "Pointwise Schur margins and the full proof sweep");
  schur->add_option("--theta-grid", config.theta_grid,
                    "Number of equispaced interior angles");
  CLI::App* convexity = app.add_subcommand(
      "convexity", "Second derivative of the profile vs finite differences");
  convexity->add_option("--theta-grid", config.theta_grid,
                        "Number of equispaced interior angles");
  CLI::App* endpoints = app.add_subcommand(
      "endpoints", "Profile endpoint values against the Beta-identity bound");
  CLI::App* ratio_sweep = app.add_subcommand(
      "ratio-sweep", "Random trig polynomials against the sharp bound");
  ratio_sweep->add_option("--samples", config.samples, "Number of random samples");
  ratio_sweep->add_option("--degree", config.degree, "Polynomial degree");
  ratio_sweep->add_option("--seed", config.seed, "Sampling seed");
  ratio_sweep->add_option("--angle", config.angle,
                          "Rotate boundary data by this angle first");
  CLI::App* epsilon_sweep = app.add_subcommand(
      "epsilon-sweep", "Near-extremal family ratios for eps in the default sweep");
  CLI::App* maximize = app.add_subcommand(
      "maximize", "Simplex search for the largest normalized ratio");
  maximize->add_option("--degree", config.degree, "Polynomial degree");
  maximize->add_option("--seed", config.seed, "Search seed");
  maximize->add_option("--budget", config.budget, "Objective evaluation budget");
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the full verification battery");

  for (CLI::App* cmd : {constants, schur, convexity, endpoints, ratio_sweep,
                        epsilon_sweep, maximize, selftest}) {
    add_common(cmd, config, format);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;  // usage errors exit 3
  }

  using Command = hardy::RunConfig::Command;
  if (constants->parsed()) config.command = Command::constants;
  if (schur->parsed()) config.command = Command::schur;
  if (convexity->parsed()) config.command = Command::convexity;
  if (endpoints->parsed()) config.command = Command::endpoints;
  if (ratio_sweep->parsed()) config.command = Command::ratio_sweep;
  if (epsilon_sweep->parsed()) config.command = Command::epsilon_sweep;
  if (maximize->parsed()) config.command = Command::maximize;
  if (selftest->parsed()) config.command = Command::selftest;
  config.format = format == "json" ? hardy::RunConfig::Format::json
                                   : hardy::RunConfig::Format::csv;

  return hardy::run(config, std::cout, std::cerr);
}
