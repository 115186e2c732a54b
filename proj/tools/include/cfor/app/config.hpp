#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfor/solver.hpp"

namespace cfor::app {

enum class CaseKind { vortex, shock_entropy, kernel_report };

const char* to_string(CaseKind kind);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  CaseKind kind = CaseKind::vortex;
  std::string output_dir = "out";

  // [scheme]
  int half_width = 32;
  double r_highpass = 3.2;
  double r_pred = 3.2;
  double r_rest = 3.2;
  double cfl = 0.5;
  double zeta = 0.0015;  // CforConfig::filter_off disables the filter
  MeasureScaling measure_scaling = MeasureScaling::absolute;
  FilterVariables filter_variables = FilterVariables::conserved;

  // case section
  std::vector<std::size_t> n;
  double t_final = 0.0;
  std::vector<double> output_times;
  double lambda = 5.0;
  double kappa = 13.0;
  double epsilon = 0.01;
  std::optional<std::size_t> resample;
  std::size_t spectrum_samples = 201;

  CforConfig scheme() const;
};

/// Defaults for a case before any file keys are applied.
RunConfig defaults_for(CaseKind kind);

/// Parses the INI text. Unknown sections or keys, malformed values and values
/// outside the sanity bands raise ConfigError.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Throws ConfigError on the first out-of-band value.
void validate(const RunConfig& cfg);

/// The fully resolved config in the same INI format.
void write_config(std::ostream& os, const RunConfig& cfg);

}  // namespace cfor::app
