#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "cfor/convolution.hpp"
#include "cfor/euler.hpp"
#include "cfor/grid.hpp"
#include "cfor/kernel.hpp"
#include "cfor/sensor.hpp"

namespace cfor {

/// How the density measure is scaled before it is compared with zeta.
/// absolute: summed over every grid line. per_line: averaged over the grid
/// lines, so a 2D field is on the same footing as a 1D one. domain: divided
/// by the domain length (1D) or area (2D).
enum class MeasureScaling { absolute, per_line, domain };

/// Variables the low-pass filter acts on. Density is filtered in both cases.
enum class FilterVariables { conserved, primitive };

/// Parameters of the filtered scheme. Kernel spacings are taken from the
/// grid per axis, so only r and the half width matter here.
struct CforConfig {
  dsc::KernelParams kernel_hp{1.0, 3.2, 32, 1};
  dsc::KernelParams kernel_pred{1.0, 3.2, 32, 0};
  dsc::KernelParams kernel_rest{1.0, 3.2, 32, 0};
  double cfl = 0.5;
  /// Sensor threshold; +infinity disables the low-pass step.
  double zeta = 0.0015;
  euler::GasModel gas;
  std::vector<int> sensor_scales{1};
  MeasureScaling measure_scaling = MeasureScaling::absolute;
  FilterVariables filter_variables = FilterVariables::conserved;

  static constexpr double zeta_min = 0.0005;
  static constexpr double zeta_max = 0.01;
  static constexpr double filter_off = std::numeric_limits<double>::infinity();

  bool filter_enabled() const { return zeta != filter_off; }
  void validate() const;
};

/// Spatial operators bound to one grid: the first-derivative stencils and the
/// low-pass filters for each axis, plus scratch space.
class Scheme {
 public:
  Scheme(const Grid& grid, const CforConfig& cfg);

  const CforConfig& config() const { return cfg_; }

  /// -dF/dx - dG/dy with fluxes evaluated pointwise and then differentiated.
  /// Throws euler::NonPhysicalState naming the offending node.
  ConservedField rhs(const ConservedField& U) const;

  ConservedField rk4_step(const ConservedField& U, double dt) const;

  double stable_dt(const ConservedField& U) const;

  /// Low-pass filters every conserved component along x, then along y.
  ConservedField filter(const ConservedField& U) const;

  double measure(const ConservedField& U) const;

 private:
  void check_grid(const ConservedField& U) const;

  Grid grid_;
  CforConfig cfg_;
  dsc::Stencil diff_x_;
  dsc::Stencil diff_y_;
  dsc::LowPassFilter lowpass_x_;
  dsc::LowPassFilter lowpass_y_;
};

/// Classical fourth-order Runge-Kutta step for any state with
/// `State + State` and `double * State`.
template <class State, class Rhs>
State rk4_advance(const State& u, double dt, Rhs&& rhs) {
  const State k1 = rhs(u);
  const State k2 = rhs(u + (0.5 * dt) * k1);
  const State k3 = rhs(u + (0.5 * dt) * k2);
  const State k4 = rhs(u + dt * k3);
  return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

ConservedField spatial_rhs(const ConservedField& U, const CforConfig& cfg);
ConservedField rk4_step(const ConservedField& U, double dt, const CforConfig& cfg);

/// cfl * min(dx, dy) / max(|u| + a, |v| + a) over the grid.
double compute_dt(const ConservedField& U, const CforConfig& cfg);

/// Low-pass filter applied to all components, dimension by dimension.
ConservedField low_pass(const ConservedField& U, const CforConfig& cfg);

struct StepOutcome {
  ConservedField field;
  sensor::SensorState sensor;
  bool fired = false;
  double measure = 0.0;  ///< measure of the unfiltered high-pass update
};

/// One step of the filtered scheme: RK4 update, then the low-pass filter if
/// the high-frequency measure grew by more than zeta.
StepOutcome cfor_step(const Scheme& scheme, const ConservedField& U, double dt,
                      const sensor::SensorState& sensor);
std::pair<ConservedField, sensor::SensorState> cfor_step(const ConservedField& U,
                                                         const sensor::SensorState& sensor,
                                                         const CforConfig& cfg);

/// Initial sensor state for a field under a config.
sensor::SensorState make_sensor(const Scheme& scheme, const ConservedField& U);

struct StepRecord {
  std::size_t step = 0;
  double t = 0.0;
  double measure = 0.0;
  double delta = 0.0;
  bool fired = false;
};

/// Time integration with CFL-limited steps.
class Simulation {
 public:
  Simulation(ConservedField initial, CforConfig cfg, double t0 = 0.0);

  /// Steps until `t_target`, shortening the last step to land on it exactly.
  void advance_to(double t_target);
  /// One step of the given size.
  void step(double dt);
  /// One CFL-limited step.
  void step();

  const ConservedField& state() const { return state_; }
  double time() const { return t_; }
  std::size_t steps() const { return steps_; }
  std::size_t filter_count() const { return fired_; }
  const sensor::SensorState& sensor() const { return sensor_; }
  const std::vector<StepRecord>& log() const { return log_; }
  const Scheme& scheme() const { return scheme_; }

 private:
  Scheme scheme_;
  ConservedField state_;
  sensor::SensorState sensor_;
  double t_;
  std::size_t steps_ = 0;
  std::size_t fired_ = 0;
  std::vector<StepRecord> log_;
};

}  // namespace cfor
