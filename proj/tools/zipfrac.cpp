#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zipfrac/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rational cubic trigonometric zipper fractal interpolation"};
  app.require_subcommand(1);

  zipfrac::CliOverrides ov;
  if (const char* env = std::getenv("ZIPFRAC_OUTDIR")) {
    if (*env != '\0') ov.outdir = env;
  }

  std::string config;
  CLI::App* interpolate =
      app.add_subcommand("interpolate", "converge the interpolant; write CSV/JSON/SVG");
  CLI::App* bounds = app.add_subcommand("bounds", "print positivity parameter bounds");
  CLI::App* check = app.add_subcommand("check", "certify positivity and probe a dense grid");
  CLI::App* demo = app.add_subcommand("demo", "write the six built-in showcase curves");

  for (CLI::App* sub : {interpolate, bounds, check}) {
    sub->add_option("config", config, "JSON config file")->required();
  }
  for (CLI::App* sub : {interpolate, check, demo}) {
    sub->add_option("--grid", ov.grid, "grid points (overrides config)");
    sub->add_option("--tol", ov.tol, "stopping tolerance (overrides config)");
    sub->add_option("--max-iters", ov.max_iters, "iteration cap (overrides config)");
  }
  for (CLI::App* sub : {interpolate, bounds, check, demo}) {
    sub->add_option("--outdir", ov.outdir, "output root (default $ZIPFRAC_OUTDIR)");
  }

  CLI11_PARSE(app, argc, argv);

  if (interpolate->parsed()) return zipfrac::cmd_interpolate(config, ov, std::cout, std::cerr);
  if (bounds->parsed()) return zipfrac::cmd_bounds(config, ov, std::cout, std::cerr);
  if (check->parsed()) return zipfrac::cmd_check(config, ov, std::cout, std::cerr);
  return zipfrac::cmd_demo(ov, std::cout, std::cerr);
}
