#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cfor/cases.hpp"

namespace cfor::cases {

euler::PrimitiveState ShockEntropySpec::pre(double x) const {
  return {std::exp(-epsilon * std::sin(kappa * x)), 0.0, 0.0, 1.0};
}

euler::PrimitiveState ShockEntropySpec::initial(double x) const {
  return x <= interface ? post : pre(x);
}

BoundaryRule shock_entropy_boundary(const ShockEntropySpec& spec, const euler::GasModel& gas) {
  return BoundaryRule::ghost([spec, gas](double x, double) {
    return euler::to_conserved(spec.initial(x), gas);
  });
}

Grid shock_entropy_grid(const ShockEntropySpec& spec, std::size_t n, const euler::GasModel& gas) {
  return Grid::line(n, spec.x_begin, spec.x_end, shock_entropy_boundary(spec, gas));
}

ConservedField init_shock_entropy(const ShockEntropySpec& spec, const Grid& grid,
                                  const euler::GasModel& gas) {
  if (grid.dims != 1) throw std::invalid_argument("shock-entropy case is one-dimensional");
  return sample(grid, gas, [&](double x, double) { return spec.initial(x); });
}

double shock_speed(const ShockEntropySpec& spec, const euler::GasModel& gas) {
  return euler::rankine_hugoniot_post_state(spec.mach, spec.pre_mean(), gas).shock_speed;
}

double generated_wavelength(const ShockEntropySpec& spec, const euler::GasModel& gas) {
  const auto jump = euler::rankine_hugoniot_post_state(spec.mach, spec.pre_mean(), gas);
  const double s = jump.shock_speed;
  return 2.0 * std::numbers::pi / spec.kappa * (s - jump.post.u) / s;
}

}  // namespace cfor::cases
