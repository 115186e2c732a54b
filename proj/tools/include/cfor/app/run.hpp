#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfor/app/config.hpp"
#include "cfor/cases.hpp"

namespace cfor::app {

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VortexGridResult {
  std::size_t n = 0;
  cases::ErrorReport errors;
  std::size_t steps = 0;
  std::size_t filter_count = 0;
  double mass_drift = 0.0;  ///< relative
};

struct ShockResult {
  std::size_t n = 0;
  std::size_t steps = 0;
  std::size_t filter_count = 0;
  double shock_x = 0.0;
  double shock_expected = 0.0;
  double amplitude = 0.0;
  std::optional<double> resampled_amplitude;
};

/// Runs one vortex grid, writing snapshots and the sensor log into `dir`.
VortexGridResult run_vortex_grid(const RunConfig& cfg, std::size_t n, const std::string& dir,
                                 const std::string& sensor_file);
/// Vortex convergence study over cfg.n; writes errors.csv.
std::vector<cases::ConvergenceRow> run_vortex(const RunConfig& cfg, std::ostream& log);
ShockResult run_shock_entropy(const RunConfig& cfg, std::ostream& log);
void run_kernel_report(const RunConfig& cfg, std::ostream& log);

void write_errors_csv(std::ostream& os, const std::vector<cases::ConvergenceRow>& rows, double cfl,
                      double t);

/// `run <config>`: resolves the config, echoes it into the output directory
/// and executes the case. Returns the process exit status; failures print a
/// JSON error record on `err` and into <output_dir>/error.json.
int run_command(const std::string& config_path, const std::optional<std::string>& output_dir,
                std::ostream& out, std::ostream& err);

/// `table <config>...`: runs vortex configs at several grids and writes one
/// convergence table.
int table_command(const std::vector<std::string>& config_paths,
                  const std::optional<std::string>& output_dir, std::ostream& out,
                  std::ostream& err);

}  // namespace cfor::app
