// Command-line front end: generate, analyze, validate, sweep.

#include <iostream>

#include <CLI11.hpp>

#include "frustum/commands.hpp"

int main(int argc, char** argv) {
  using frustum::cli::Command;
  using frustum::cli::RunConfig;

  CLI::App app{"Frustum model generator and analysis toolkit"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--model", config.model, "Model file (key = value)");
    sub->add_option("--horizon", config.horizon, "Override the horizon T");
    sub->add_option("--budget", config.budget, "Override the vertex budget");
    sub->add_option("--out", config.out, "Output directory");
    sub->add_option("--workers", config.workers, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  };

  auto* generate = app.add_subcommand("generate", "Generate a frustum graph and export it");
  add_common(generate);

  auto* analyze = app.add_subcommand("analyze", "Per-step metrics for every snapshot");
  add_common(analyze);
  analyze->add_option("--in", config.input, "Directory written by 'generate'")->excludes("--model");
  analyze->add_flag("--distances", config.distances, "Diameter, Wiener index, average distance");
  analyze->add_flag("--spectral", config.spectral, "Normalized Laplacian spectral gap");

  auto* validate = app.add_subcommand("validate", "Closed forms against brute-force measurement");
  add_common(validate);
  validate->add_option("--inject-fault", config.fault, "Perturb one oracle (negative control)")->group("");

  auto* sweep = app.add_subcommand("sweep", "Densification diagnostics over a parameter grid");
  add_common(sweep);
  sweep->add_option("--grid", config.grid, "Grid file: one 'n f g' cell per line");
  sweep->add_option("--f", config.f_specs, "f sequences (e.g. const:1, affine:1,0, table:1,2)");
  sweep->add_option("--g", config.g_specs, "g sequences, crossed with --f");
  sweep->add_option("--n", config.seed_order, "Seed order for --f/--g cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : frustum::cli::kExitInput;
  }

  if (generate->parsed()) config.command = Command::kGenerate;
  if (analyze->parsed()) config.command = Command::kAnalyze;
  if (validate->parsed()) config.command = Command::kValidate;
  if (sweep->parsed()) config.command = Command::kSweep;
  return frustum::cli::run(config, std::cout, std::cerr);
}
