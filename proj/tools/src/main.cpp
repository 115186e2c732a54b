#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfor/app/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Filtered DSC solver for the compressible Euler equations"};
  app.require_subcommand(1);

  std::string output_dir;
  bool seedless = false;
  app.add_option("--output-dir", output_dir, "Directory for artifacts (overrides the config)");
  // nothing in the solver draws random numbers; accepted so scripts can pass it
  app.add_flag("--seedless", seedless, "Reserved; runs are deterministic");

  std::string config;
  auto* run = app.add_subcommand("run", "Run the case described by a config file");
  run->add_option("config", config, "Config file")->required();

  std::vector<std::string> configs;
  auto* table = app.add_subcommand("table", "Convergence table over vortex configs");
  table->add_option("configs", configs, "Config files at increasing grid size")->required();

  CLI11_PARSE(app, argc, argv);

  const std::optional<std::string> dir =
      output_dir.empty() ? std::nullopt : std::optional<std::string>(output_dir);
  if (*run) return cfor::app::run_command(config, dir, std::cout, std::cerr);
  return cfor::app::table_command(configs, dir, std::cout, std::cerr);
}
