#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cfor::euler {

/// Raised when a state has nonpositive density or pressure.
class NonPhysicalState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calorically perfect gas.
struct GasModel {
  double gamma = 1.4;
};

struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

struct ConservedState {
  double rho = 1.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 2.5;
};

using Flux = std::array<double, 4>;

ConservedState to_conserved(const PrimitiveState& w, const GasModel& gas);

/// Throws NonPhysicalState when rho <= 0 or the recovered pressure is <= 0.
PrimitiveState to_primitive(const ConservedState& U, const GasModel& gas);

double pressure(const ConservedState& U, const GasModel& gas);
double sound_speed(const PrimitiveState& w, const GasModel& gas);

/// (rho u, rho u^2 + p, rho u v, u (E + p))
Flux flux_x(const ConservedState& U, const GasModel& gas);
/// (rho v, rho u v, rho v^2 + p, v (E + p))
Flux flux_y(const ConservedState& U, const GasModel& gas);

struct ShockJump {
  PrimitiveState post;
  double shock_speed = 0.0;  ///< lab frame
};

/// State behind a right-moving normal shock of Mach number `mach` relative to
/// the gas ahead of it. Throws std::invalid_argument for mach <= 1.
ShockJump rankine_hugoniot_post_state(double mach, const PrimitiveState& pre, const GasModel& gas);

}  // namespace cfor::euler
