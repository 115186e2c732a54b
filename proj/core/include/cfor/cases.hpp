#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cfor/euler.hpp"
#include "cfor/grid.hpp"

namespace cfor::cases {

// ---------------------------------------------------------------------------
// Isentropic vortex advected by a uniform stream on a periodic square.

struct VortexSpec {
  double lambda = 5.0;  ///< vortex strength
  double eta = 1.0;     ///< gradient parameter
  double x0 = 5.0;
  double y0 = 5.0;
  double length = 10.0;  ///< side of the periodic domain [0, length]^2
  double u_inf = 1.0;
  double v_inf = 1.0;

  /// (gamma - 1) lambda^2 / (16 eta gamma pi^2), the peak temperature drop.
  double temperature_drop(const euler::GasModel& gas) const;
  /// Throws std::invalid_argument if the core density would be nonpositive.
  void validate(const euler::GasModel& gas) const;
};

/// Periodic [0, L]^2 grid with n nodes per side (spacing L / n).
Grid vortex_grid(const VortexSpec& spec, std::size_t n);

euler::PrimitiveState vortex_state(const VortexSpec& spec, double t, double x, double y,
                                   const euler::GasModel& gas);

/// Exact solution: the initial profile translated by (u_inf, v_inf) t with
/// periodic wrapping (nearest image).
ConservedField vortex_exact(const VortexSpec& spec, double t, const Grid& grid,
                            const euler::GasModel& gas);

// ---------------------------------------------------------------------------
// Error norms with the (N+1)^2 normalisation of the vortex benchmark.

struct ErrorReport {
  double l1 = 0.0;
  double l2 = 0.0;
  std::optional<double> order_l1;
  std::optional<double> order_l2;
};

/// L1 = sum |f - g| / M, L2 = sqrt(sum |f - g|^2 / M) over M samples. With
/// M = (N+1)^2 these are the benchmark's L1 and (1/(N+1)) sqrt(sum ...).
ErrorReport error_norms(std::span<const double> numerical, std::span<const double> exact);

/// Periodic nx-by-ny array sampled on the closed (nx+1)-by-(ny+1) node set,
/// repeating the first row and column at the far edges.
std::vector<double> closed_periodic(std::span<const double> field, std::size_t nx, std::size_t ny);

/// log(coarse / fine) / log(n_fine / n_coarse).
double convergence_order(double coarse_error, double fine_error, std::size_t n_coarse,
                         std::size_t n_fine);

struct ConvergenceRow {
  std::size_t n = 0;
  ErrorReport errors;
};

/// Fills order_l1/order_l2 of every row after the first. Rows must be sorted
/// by increasing n; throws std::invalid_argument for fewer than two rows.
std::vector<ConvergenceRow> convergence_table(std::vector<ConvergenceRow> rows);

// ---------------------------------------------------------------------------
// Mach 3 shock running into a stationary entropy wave.

struct ShockEntropySpec {
  double epsilon = 0.01;
  double kappa = 13.0;
  double x_begin = 0.0;
  double x_end = 5.0;
  double interface = 0.5;
  euler::PrimitiveState post{3.85714, 2.629369, 0.0, 10.33333};
  double mach = 3.0;
  double post_amplitude_ref = 0.08690716;

  /// Quiescent state ahead of the shock at x.
  euler::PrimitiveState pre(double x) const;
  /// Piecewise initial state.
  euler::PrimitiveState initial(double x) const;
  /// Mean state ahead of the shock (rho = 1, u = 0, p = 1).
  euler::PrimitiveState pre_mean() const { return {1.0, 0.0, 0.0, 1.0}; }
};

/// Ghost boundary that evaluates the initial data outside [x_begin, x_end].
/// Exact while no wave has reached either end.
BoundaryRule shock_entropy_boundary(const ShockEntropySpec& spec, const euler::GasModel& gas);

/// n nodes on [x_begin, x_end], both ends included.
Grid shock_entropy_grid(const ShockEntropySpec& spec, std::size_t n, const euler::GasModel& gas);

ConservedField init_shock_entropy(const ShockEntropySpec& spec, const Grid& grid,
                                  const euler::GasModel& gas);

/// Lab-frame speed of the Mach-3 shock into the mean pre-shock state.
double shock_speed(const ShockEntropySpec& spec, const euler::GasModel& gas);

/// Wavelength of the entropy wave behind the shock: the pre-shock wavelength
/// compressed by (s - u_post) / s.
double generated_wavelength(const ShockEntropySpec& spec, const euler::GasModel& gas);

// ---------------------------------------------------------------------------
// Diagnostics.

/// s = (ln p - gamma ln rho) / gamma; equals -ln rho at p = 1, so the
/// pre-shock wave has amplitude epsilon.
std::vector<double> entropy_field(const ConservedField& U, const euler::GasModel& gas);

std::vector<double> pressure_field(const ConservedField& U, const euler::GasModel& gas);

/// x midway between the two nodes with the largest density jump.
/// Throws std::runtime_error if the field has no jump above round-off.
double shock_position(const ConservedField& U);

struct MeasurementWindow {
  double lo = 0.0;
  double hi = 0.0;
  double wavelength = 0.0;
};

/// Window over the fully developed post-shock entropy wave at time t:
/// from `lead` wavelengths behind the shock back to `trail` wavelengths
/// ahead of the material that started at the initial interface.
MeasurementWindow postshock_window(const ShockEntropySpec& spec, const euler::GasModel& gas,
                                   double t, double shock_x, double lead = 3.0, double trail = 1.0);

/// Half the mean peak-to-trough excursion of s about its window mean,
/// using discrete local extrema inside the window. Returns 0 when the window
/// holds no extrema. Throws std::invalid_argument if the window spans fewer
/// than three wavelengths.
double postshock_amplitude(std::span<const double> x, std::span<const double> s,
                           const MeasurementWindow& window);

/// Mean of `values` over nodes with x in [window.lo, window.hi].
double window_mean(std::span<const double> x, std::span<const double> values,
                   const MeasurementWindow& window);

}  // namespace cfor::cases
