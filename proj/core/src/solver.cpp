#include "cfor/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cfor {

namespace {

dsc::KernelParams with_spacing(dsc::KernelParams p, double delta) {
  p.delta = delta;
  return p;
}

[[noreturn]] void report_nonphysical(double x, double y, double rho, double p) {
  std::ostringstream msg;
  msg << "non-physical state at (x=" << x << ", y=" << y << "): rho=" << rho << ", p=" << p;
  throw euler::NonPhysicalState(msg.str());
}

// In-place algebraic maps between (rho, rho u, rho v, E) and (rho, u, v, p)
// over a whole ghosted line. Pressure may be negative on entry; the filtered
// state is checked once it is carried forward.
void to_primitive_line(GhostedLine& line, double gm1) {
  for (std::size_t k = 0; k < line.q[0].size(); ++k) {
    const double rho = line.q[0][k];
    if (!(rho > 0.0)) throw euler::NonPhysicalState("filter: nonpositive density in line");
    const double u = line.q[1][k] / rho;
    const double v = line.q[2][k] / rho;
    line.q[3][k] = gm1 * (line.q[3][k] - 0.5 * rho * (u * u + v * v));
    line.q[1][k] = u;
    line.q[2][k] = v;
  }
}

void to_conserved_line(GhostedLine& line, double gm1) {
  for (std::size_t k = 0; k < line.q[0].size(); ++k) {
    const double rho = line.q[0][k];
    const double u = line.q[1][k];
    const double v = line.q[2][k];
    line.q[3][k] = line.q[3][k] / gm1 + 0.5 * rho * (u * u + v * v);
    line.q[1][k] = rho * u;
    line.q[2][k] = rho * v;
  }
}

}  // namespace

void CforConfig::validate() const {
  kernel_hp.validate();
  kernel_pred.validate();
  kernel_rest.validate();
  if (kernel_hp.order != 1) throw std::invalid_argument("high-pass kernel must have order 1");
  if (kernel_pred.order != 0 || kernel_rest.order != 0)
    throw std::invalid_argument("low-pass kernels must have order 0");
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (filter_enabled() && !(zeta >= zeta_min && zeta <= zeta_max)) {
    std::ostringstream msg;
    msg << "zeta " << zeta << " outside [" << zeta_min << ", " << zeta_max << "]";
    throw std::invalid_argument(msg.str());
  }
  if (!(gas.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (sensor_scales.empty()) throw std::invalid_argument("sensor needs at least one scale");
}

Scheme::Scheme(const Grid& grid, const CforConfig& cfg)
    : grid_(grid),
      cfg_(cfg),
      diff_x_(dsc::Stencil::from(dsc::build_kernel(with_spacing(cfg.kernel_hp, grid.dx)))),
      diff_y_(dsc::Stencil::from(dsc::build_kernel(with_spacing(cfg.kernel_hp, grid.dy)))),
      lowpass_x_(with_spacing(cfg.kernel_pred, grid.dx), with_spacing(cfg.kernel_rest, grid.dx)),
      lowpass_y_(with_spacing(cfg.kernel_pred, grid.dy), with_spacing(cfg.kernel_rest, grid.dy)) {
  cfg_.validate();
}

void Scheme::check_grid(const ConservedField& U) const {
  const Grid& g = U.grid();
  if (g.nx != grid_.nx || g.ny != grid_.ny || g.dims != grid_.dims)
    throw std::invalid_argument("field does not live on the scheme's grid");
}

ConservedField Scheme::rhs(const ConservedField& U) const {
  check_grid(U);
  const Grid& g = U.grid();
  const double gm1 = cfg_.gas.gamma - 1.0;
  const std::size_t width = static_cast<std::size_t>(cfg_.kernel_hp.half_width);

  ConservedField out(U.grid_ptr());
  GhostedLine line;
  std::array<std::vector<double>, 4> flux;
  std::vector<double> derivative;

  auto sweep = [&](Axis axis, const dsc::Stencil& stencil) {
    const std::size_t n = g.extent(axis);
    const std::size_t lines = axis == Axis::x ? g.ny : g.nx;
    const std::size_t m = n + 2 * width;
    for (auto& f : flux) f.resize(m);
    derivative.resize(n);
    for (std::size_t l = 0; l < lines; ++l) {
      fill_ghosts(U, axis, l, width, line);
      for (std::size_t k = 0; k < m; ++k) {
        const double rho = line.q[0][k];
        const double mx = line.q[1][k];
        const double my = line.q[2][k];
        const double E = line.q[3][k];
        const double p = gm1 * (E - 0.5 * (mx * mx + my * my) / rho);
        if (!(rho > 0.0) || !(p > 0.0)) {
          const long pos = static_cast<long>(k) - static_cast<long>(width);
          const double x = axis == Axis::x ? g.x(pos) : g.x(static_cast<long>(l));
          const double y = axis == Axis::x ? g.y(static_cast<long>(l)) : g.y(pos);
          report_nonphysical(x, y, rho, p);
        }
        const double vel = (axis == Axis::x ? mx : my) / rho;
        flux[0][k] = rho * vel;
        flux[1][k] = mx * vel;
        flux[2][k] = my * vel;
        flux[3][k] = vel * (E + p);
        (axis == Axis::x ? flux[1][k] : flux[2][k]) += p;
      }
      for (std::size_t c = 0; c < 4; ++c) {
        dsc::convolve(flux[c].data() + width, n, stencil, derivative.data());
        auto dst = out.component(c);
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t idx = axis == Axis::x ? g.index(k, l) : g.index(l, k);
          dst[idx] -= derivative[k];
        }
      }
    }
  };

  sweep(Axis::x, diff_x_);
  if (g.dims == 2) sweep(Axis::y, diff_y_);
  return out;
}

ConservedField Scheme::rk4_step(const ConservedField& U, double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  return rk4_advance(U, dt, [this](const ConservedField& s) { return rhs(s); });
}

double Scheme::stable_dt(const ConservedField& U) const {
  check_grid(U);
  const Grid& g = U.grid();
  double fastest = 0.0;
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const auto w = euler::to_primitive(U.state(i, j), cfg_.gas);
      const double a = euler::sound_speed(w, cfg_.gas);
      fastest = std::max(fastest, std::abs(w.u) + a);
      if (g.dims == 2) fastest = std::max(fastest, std::abs(w.v) + a);
    }
  }
  const double h = g.dims == 2 ? std::min(g.dx, g.dy) : g.dx;
  return cfg_.cfl * h / fastest;
}

ConservedField Scheme::filter(const ConservedField& U) const {
  check_grid(U);
  const Grid& g = U.grid();
  ConservedField V = U;
  GhostedLine line;
  std::vector<double> scratch;
  const bool primitive = cfg_.filter_variables == FilterVariables::primitive;
  const double gm1 = cfg_.gas.gamma - 1.0;

  auto sweep = [&](Axis axis, const dsc::LowPassFilter& lp) {
    const std::size_t n = g.extent(axis);
    const std::size_t lines = axis == Axis::x ? g.ny : g.nx;
    for (std::size_t l = 0; l < lines; ++l) {
      fill_ghosts(V, axis, l, lp.ghost_width(), line);
      if (primitive) to_primitive_line(line, gm1);
      for (std::size_t c = 0; c < 4; ++c) lp.apply_padded(line.origin(c), n, scratch);
      if (primitive) to_conserved_line(line, gm1);
      store_line(line, axis, l, V);
    }
  };

  sweep(Axis::x, lowpass_x_);
  if (g.dims == 2) sweep(Axis::y, lowpass_y_);
  return V;
}

double Scheme::measure(const ConservedField& U) const {
  const Grid& g = U.grid();
  double m = sensor::measure_grid(U.component(0), g.nx, g.ny, cfg_.sensor_scales,
                                  g.periodic(Axis::x), g.dims == 2 && g.periodic(Axis::y));
  switch (cfg_.measure_scaling) {
    case MeasureScaling::absolute:
      break;
    case MeasureScaling::per_line:
      if (g.dims == 2) m /= static_cast<double>(g.nx + g.ny);
      break;
    case MeasureScaling::domain: {
      double extent = g.x1 - g.x0;
      if (g.dims == 2) extent *= g.y1 - g.y0;
      m /= extent;
      break;
    }
  }
  return m;
}

ConservedField spatial_rhs(const ConservedField& U, const CforConfig& cfg) {
  return Scheme(U.grid(), cfg).rhs(U);
}

ConservedField rk4_step(const ConservedField& U, double dt, const CforConfig& cfg) {
  return Scheme(U.grid(), cfg).rk4_step(U, dt);
}

double compute_dt(const ConservedField& U, const CforConfig& cfg) {
  return Scheme(U.grid(), cfg).stable_dt(U);
}

ConservedField low_pass(const ConservedField& U, const CforConfig& cfg) {
  return Scheme(U.grid(), cfg).filter(U);
}

sensor::SensorState make_sensor(const Scheme& scheme, const ConservedField& U) {
  sensor::SensorState s;
  s.zeta = scheme.config().zeta;
  s.scales = scheme.config().sensor_scales;
  s.last_measure = scheme.measure(U);
  return s;
}

StepOutcome cfor_step(const Scheme& scheme, const ConservedField& U, double dt,
                      const sensor::SensorState& sensor) {
  ConservedField updated = scheme.rk4_step(U, dt);
  const double m = scheme.measure(updated);
  auto [fire, next] = sensor::should_filter(sensor, m);
  if (fire) {
    ConservedField filtered = scheme.filter(updated);
    next.last_measure = scheme.measure(filtered);
    return {std::move(filtered), std::move(next), true, m};
  }
  return {std::move(updated), std::move(next), false, m};
}

std::pair<ConservedField, sensor::SensorState> cfor_step(const ConservedField& U,
                                                         const sensor::SensorState& sensor,
                                                         const CforConfig& cfg) {
  const Scheme scheme(U.grid(), cfg);
  auto out = cfor_step(scheme, U, scheme.stable_dt(U), sensor);
  return {std::move(out.field), std::move(out.sensor)};
}

Simulation::Simulation(ConservedField initial, CforConfig cfg, double t0)
    : scheme_(initial.grid(), cfg),
      state_(std::move(initial)),
      sensor_(make_sensor(scheme_, state_)),
      t_(t0) {}

void Simulation::step(double dt) {
  const double before = sensor_.last_measure;
  std::optional<StepOutcome> attempt;
  try {
    attempt.emplace(cfor_step(scheme_, state_, dt, sensor_));
  } catch (const euler::NonPhysicalState& e) {
    std::ostringstream msg;
    msg << e.what() << " during step " << steps_ + 1 << " from t=" << t_;
    throw euler::NonPhysicalState(msg.str());
  }
  auto& out = *attempt;
  state_ = std::move(out.field);
  sensor_ = std::move(out.sensor);
  t_ += dt;
  ++steps_;
  if (out.fired) ++fired_;
  log_.push_back({steps_, t_, out.measure, out.measure - before, out.fired});
}

void Simulation::step() { step(scheme_.stable_dt(state_)); }

void Simulation::advance_to(double t_target) {
  while (t_ < t_target) {
    double dt = scheme_.stable_dt(state_);
    const bool last = t_ + dt >= t_target * (1.0 - 1e-14);
    if (last) dt = t_target - t_;
    if (!(dt > 0.0)) break;
    step(dt);
    if (last) {
      t_ = t_target;
      log_.back().t = t_;
      break;
    }
  }
}

}  // namespace cfor
