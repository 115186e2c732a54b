#include "cfor/euler.hpp"

#include <cmath>

namespace cfor::euler {

ConservedState to_conserved(const PrimitiveState& w, const GasModel& gas) {
  const double kinetic = 0.5 * w.rho * (w.u * w.u + w.v * w.v);
  return {w.rho, w.rho * w.u, w.rho * w.v, w.p / (gas.gamma - 1.0) + kinetic};
}

double pressure(const ConservedState& U, const GasModel& gas) {
  return (gas.gamma - 1.0) * (U.E - 0.5 * (U.mx * U.mx + U.my * U.my) / U.rho);
}

PrimitiveState to_primitive(const ConservedState& U, const GasModel& gas) {
  if (!(U.rho > 0.0))
    throw NonPhysicalState("nonpositive density " + std::to_string(U.rho));
  const double p = pressure(U, gas);
  if (!(p > 0.0)) throw NonPhysicalState("nonpositive pressure " + std::to_string(p));
  return {U.rho, U.mx / U.rho, U.my / U.rho, p};
}

double sound_speed(const PrimitiveState& w, const GasModel& gas) {
  return std::sqrt(gas.gamma * w.p / w.rho);
}

Flux flux_x(const ConservedState& U, const GasModel& gas) {
  const auto w = to_primitive(U, gas);
  return {U.mx, U.mx * w.u + w.p, U.my * w.u, w.u * (U.E + w.p)};
}

Flux flux_y(const ConservedState& U, const GasModel& gas) {
  const auto w = to_primitive(U, gas);
  return {U.my, U.mx * w.v, U.my * w.v + w.p, w.v * (U.E + w.p)};
}

ShockJump rankine_hugoniot_post_state(double mach, const PrimitiveState& pre, const GasModel& gas) {
  if (!(mach > 1.0))
    throw std::invalid_argument("shock Mach number must exceed 1, got " + std::to_string(mach));
  const double g = gas.gamma;
  const double m2 = mach * mach;
  const double speed = pre.u + mach * sound_speed(pre, gas);

  ShockJump jump;
  jump.shock_speed = speed;
  jump.post.rho = pre.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
  jump.post.p = pre.p * (1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0));
  // mass flux through the shock is continuous
  jump.post.u = speed - (speed - pre.u) * pre.rho / jump.post.rho;
  jump.post.v = pre.v;
  return jump;
}

}  // namespace cfor::euler
