#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cfor/cases.hpp"

namespace cfor::cases {

namespace {

constexpr double pi = std::numbers::pi;

// Nearest-image separation on a periodic interval of length L.
double separation(double x, double centre, double length) {
  double d = x - centre;
  d -= length * std::round(d / length);
  return d;
}

}  // namespace

double VortexSpec::temperature_drop(const euler::GasModel& gas) const {
  const double g = gas.gamma;
  return (g - 1.0) * lambda * lambda / (16.0 * eta * g * pi * pi);
}

void VortexSpec::validate(const euler::GasModel& gas) const {
  if (!(eta > 0.0)) throw std::invalid_argument("vortex: eta must be positive");
  if (!(length > 0.0)) throw std::invalid_argument("vortex: domain length must be positive");
  if (!(temperature_drop(gas) * std::exp(2.0 * eta) < 1.0))
    throw std::invalid_argument("vortex: strength too large, core density would be nonpositive");
}

Grid vortex_grid(const VortexSpec& spec, std::size_t n) {
  return Grid::plane(n, n, 0.0, spec.length, 0.0, spec.length, BoundaryRule::periodic(),
                     BoundaryRule::periodic());
}

euler::PrimitiveState vortex_state(const VortexSpec& spec, double t, double x, double y,
                                   const euler::GasModel& gas) {
  const double xc = std::fmod(spec.x0 + spec.u_inf * t, spec.length);
  const double yc = std::fmod(spec.y0 + spec.v_inf * t, spec.length);
  const double dx = separation(x, xc, spec.length);
  const double dy = separation(y, yc, spec.length);
  const double bump = std::exp(spec.eta * (1.0 - (dx * dx + dy * dy)));
  const double swirl = spec.lambda / (2.0 * pi) * bump;
  const double temperature = 1.0 - spec.temperature_drop(gas) * bump * bump;
  const double rho = std::pow(temperature, 1.0 / (gas.gamma - 1.0));
  return {rho, spec.u_inf - swirl * dy, spec.v_inf + swirl * dx, rho * temperature};
}

ConservedField vortex_exact(const VortexSpec& spec, double t, const Grid& grid,
                            const euler::GasModel& gas) {
  if (t < 0.0) throw std::invalid_argument("vortex: negative time");
  spec.validate(gas);
  return sample(grid, gas, [&](double x, double y) { return vortex_state(spec, t, x, y, gas); });
}

}  // namespace cfor::cases
