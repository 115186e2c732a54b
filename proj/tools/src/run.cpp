#include "cfor/app/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "cfor/convolution.hpp"
#include "cfor/csv.hpp"
#include "cfor/solver.hpp"
#include "cfor/spectrum.hpp"

namespace cfor::app {

namespace fs = std::filesystem;
using csv::num;

namespace {

std::ofstream open_out(const std::string& dir, const std::string& name) {
  const fs::path path = fs::path(dir) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  return os;
}

std::vector<double> output_schedule(const RunConfig& cfg) {
  std::vector<double> times = cfg.output_times;
  if (times.empty() || times.back() != cfg.t_final) times.push_back(cfg.t_final);
  return times;
}

void write_snapshot(const std::string& dir, const std::string& name, const ConservedField& U,
                    const euler::GasModel& gas) {
  auto os = open_out(dir, name);
  const Grid& g = U.grid();
  const bool plane = g.dims == 2;
  os << (plane ? "x,y,rho,u,v,p,entropy\n" : "x,rho,u,p,entropy\n");
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const auto w = euler::to_primitive(U.state(i, j), gas);
      const double s = (std::log(w.p) - gas.gamma * std::log(w.rho)) / gas.gamma;
      os << num(g.x(static_cast<long>(i))) << ',';
      if (plane) os << num(g.y(static_cast<long>(j))) << ',';
      os << num(w.rho) << ',' << num(w.u) << ',';
      if (plane) os << num(w.v) << ',';
      os << num(w.p) << ',' << num(s) << '\n';
    }
  }
}

void write_sensor_csv(const std::string& dir, const std::string& name,
                      const std::vector<StepRecord>& log) {
  auto os = open_out(dir, name);
  os << "step,t,measure,delta,fired\n";
  for (const auto& r : log)
    os << r.step << ',' << num(r.t) << ',' << num(r.measure) << ',' << num(r.delta) << ','
       << (r.fired ? 1 : 0) << '\n';
}

std::string snapshot_name(std::optional<std::size_t> n, double t) {
  std::string name = "snapshot_";
  if (n) name += "N" + std::to_string(*n) + "_";
  return name + "t" + num(t) + ".csv";
}

// Runs the simulation over the output schedule; the sensor log is written
// even when a step fails so the lead-up to the failure can be inspected.
void integrate(Simulation& sim, const RunConfig& cfg, const std::string& dir,
               std::optional<std::size_t> label, const std::string& sensor_file,
               const euler::GasModel& gas) {
  try {
    for (double t : output_schedule(cfg)) {
      sim.advance_to(t);
      write_snapshot(dir, snapshot_name(label, t), sim.state(), gas);
    }
  } catch (...) {
    write_sensor_csv(dir, sensor_file, sim.log());
    throw;
  }
  write_sensor_csv(dir, sensor_file, sim.log());
}

struct AmplitudeRow {
  std::string source;
  std::size_t n = 0;
  cases::MeasurementWindow window;
  double entropy_amplitude = 0.0;
  double mean_pressure = 0.0;
};

std::vector<double> exterior_values(const std::function<double(double)>& f, double x_edge,
                                    double dx, std::size_t pad, bool left) {
  std::vector<double> v(pad);
  for (std::size_t g = 0; g < pad; ++g) {
    const double k = static_cast<double>(left ? pad - g : g + 1);
    v[g] = f(left ? x_edge - k * dx : x_edge + k * dx);
  }
  return v;
}

void write_json_error(std::ostream& err, const std::optional<std::string>& dir,
                      const std::string& kind, const std::string& message,
                      const std::string& config) {
  const nlohmann::json record = {
      {"status", "error"}, {"kind", kind}, {"message", message}, {"config", config}};
  err << record.dump() << '\n';
  if (!dir) return;
  std::error_code ec;
  fs::create_directories(*dir, ec);
  std::ofstream os(fs::path(*dir) / "error.json", std::ios::binary);
  if (os) os << record.dump(2) << '\n';
}

template <class Body>
int guarded(const std::string& config, std::optional<std::string>& dir, std::ostream& err,
            Body&& body) {
  try {
    body();
    return 0;
  } catch (const ConfigError& e) {
    write_json_error(err, dir, "invalid_config", e.what(), config);
    return 2;
  } catch (const euler::NonPhysicalState& e) {
    write_json_error(err, dir, "nonphysical_state", e.what(), config);
    return 3;
  } catch (const InvariantViolation& e) {
    write_json_error(err, dir, "invariant_violation", e.what(), config);
    return 4;
  } catch (const std::exception& e) {
    write_json_error(err, dir, "runtime_error", e.what(), config);
    return 1;
  }
}

void prepare_dir(const RunConfig& cfg) {
  fs::create_directories(cfg.output_dir);
  fs::remove(fs::path(cfg.output_dir) / "error.json");
  auto os = open_out(cfg.output_dir, "config.resolved.ini");
  write_config(os, cfg);
}

void print_table(std::ostream& out, const std::vector<cases::ConvergenceRow>& rows) {
  out << std::setw(6) << "N" << std::setw(14) << "L1" << std::setw(9) << "order" << std::setw(14)
      << "L2" << std::setw(9) << "order" << '\n';
  for (const auto& r : rows) {
    out << std::setw(6) << r.n << std::scientific << std::setprecision(3) << std::setw(14)
        << r.errors.l1;
    out << std::fixed << std::setprecision(2) << std::setw(9);
    if (r.errors.order_l1) out << *r.errors.order_l1; else out << "-";
    out << std::scientific << std::setprecision(3) << std::setw(14) << r.errors.l2;
    out << std::fixed << std::setprecision(2) << std::setw(9);
    if (r.errors.order_l2) out << *r.errors.order_l2; else out << "-";
    out << '\n';
  }
  out << std::defaultfloat;
}

}  // namespace

VortexGridResult run_vortex_grid(const RunConfig& cfg, std::size_t n, const std::string& dir,
                                 const std::string& sensor_file) {
  const euler::GasModel gas;
  cases::VortexSpec spec;
  spec.lambda = cfg.lambda;
  const Grid grid = cases::vortex_grid(spec, n);
  const ConservedField initial = cases::vortex_exact(spec, 0.0, grid, gas);
  const double mass0 = initial.total(0);

  Simulation sim(initial, cfg.scheme());
  integrate(sim, cfg, dir, n, sensor_file, gas);

  const ConservedField exact = cases::vortex_exact(spec, cfg.t_final, grid, gas);
  VortexGridResult res;
  res.n = n;
  res.errors = cases::error_norms(cases::closed_periodic(sim.state().component(0), n, n),
                                  cases::closed_periodic(exact.component(0), n, n));
  res.steps = sim.steps();
  res.filter_count = sim.filter_count();
  res.mass_drift = std::abs(sim.state().total(0) - mass0) / mass0;
  if (!std::isfinite(res.errors.l1) || !std::isfinite(res.errors.l2))
    throw InvariantViolation("vortex N=" + std::to_string(n) + ": error norms are not finite");
  if (!(res.mass_drift <= 1e-6))
    throw InvariantViolation("vortex N=" + std::to_string(n) + ": relative mass drift " +
                             num(res.mass_drift) + " exceeds 1e-6");
  return res;
}

void write_errors_csv(std::ostream& os, const std::vector<cases::ConvergenceRow>& rows, double cfl,
                      double t) {
  os << "N,cfl,t,l1,l2,order_l1,order_l2\n";
  for (const auto& r : rows) {
    os << r.n << ',' << num(cfl) << ',' << num(t) << ',' << num(r.errors.l1) << ','
       << num(r.errors.l2) << ',';
    if (r.errors.order_l1) os << num(*r.errors.order_l1);
    os << ',';
    if (r.errors.order_l2) os << num(*r.errors.order_l2);
    os << '\n';
  }
}

std::vector<cases::ConvergenceRow> run_vortex(const RunConfig& cfg, std::ostream& log) {
  std::vector<cases::ConvergenceRow> rows;
  for (auto n : cfg.n) {
    const std::string sensor_file =
        cfg.n.size() == 1 ? "sensor.csv" : "sensor_N" + std::to_string(n) + ".csv";
    const auto res = run_vortex_grid(cfg, n, cfg.output_dir, sensor_file);
    log << "vortex N=" << n << ": " << res.steps << " steps, filter fired " << res.filter_count
        << " times, L1=" << num(res.errors.l1) << " L2=" << num(res.errors.l2) << '\n';
    rows.push_back({n, res.errors});
  }
  if (rows.size() >= 2) rows = cases::convergence_table(std::move(rows));
  auto os = open_out(cfg.output_dir, "errors.csv");
  write_errors_csv(os, rows, cfg.cfl, cfg.t_final);
  return rows;
}

ShockResult run_shock_entropy(const RunConfig& cfg, std::ostream& log) {
  const euler::GasModel gas;
  cases::ShockEntropySpec spec;
  spec.kappa = cfg.kappa;
  spec.epsilon = cfg.epsilon;
  const std::size_t n = cfg.n.front();
  const Grid grid = cases::shock_entropy_grid(spec, n, gas);

  Simulation sim(cases::init_shock_entropy(spec, grid, gas), cfg.scheme());
  integrate(sim, cfg, cfg.output_dir, std::nullopt, "sensor.csv", gas);

  const ConservedField& U = sim.state();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = grid.x(static_cast<long>(i));
  const auto s = cases::entropy_field(U, gas);
  const auto p = cases::pressure_field(U, gas);

  ShockResult res;
  res.n = n;
  res.steps = sim.steps();
  res.filter_count = sim.filter_count();
  res.shock_x = cases::shock_position(U);
  res.shock_expected = spec.interface + cases::shock_speed(spec, gas) * cfg.t_final;
  const auto window = cases::postshock_window(spec, gas, cfg.t_final, res.shock_x);

  std::vector<AmplitudeRow> rows;
  rows.push_back({"computed", n, window, cases::postshock_amplitude(x, s, window),
                  cases::window_mean(x, p, window)});

  if (cfg.resample) {
    const std::size_t m = *cfg.resample;
    const dsc::KernelParams lp{1.0, cfg.r_pred, cfg.half_width, 0};
    const std::size_t pad = dsc::required_ghosts(cfg.half_width);
    auto entropy_at = [&](double xx) {
      const auto w = spec.initial(xx);
      return (std::log(w.p) - gas.gamma * std::log(w.rho)) / gas.gamma;
    };
    auto pressure_at = [&](double xx) { return spec.initial(xx).p; };
    const dsc::GhostValues s_ghosts{exterior_values(entropy_at, grid.x0, grid.dx, pad, true),
                                    exterior_values(entropy_at, grid.x1, grid.dx, pad, false)};
    const dsc::GhostValues p_ghosts{exterior_values(pressure_at, grid.x0, grid.dx, pad, true),
                                    exterior_values(pressure_at, grid.x1, grid.dx, pad, false)};
    const auto s_fine = dsc::resample(s, m, lp, s_ghosts);
    const auto p_fine = dsc::resample(p, m, lp, p_ghosts);
    std::vector<double> x_fine(m);
    for (std::size_t k = 0; k < m; ++k)
      x_fine[k] = grid.x0 + (grid.x1 - grid.x0) * static_cast<double>(k) / static_cast<double>(m - 1);
    rows.push_back({"resampled", m, window, cases::postshock_amplitude(x_fine, s_fine, window),
                    cases::window_mean(x_fine, p_fine, window)});
  }

  auto os = open_out(cfg.output_dir, "amplitude.csv");
  os << "source,N,t,shock_x,shock_expected,window_lo,window_hi,entropy_amplitude,mean_pressure,"
        "amplitude,reference,relative_error\n";
  for (const auto& r : rows) {
    const double amplitude = r.entropy_amplitude * r.mean_pressure;
    os << r.source << ',' << r.n << ',' << num(cfg.t_final) << ',' << num(res.shock_x) << ','
       << num(res.shock_expected) << ',' << num(r.window.lo) << ',' << num(r.window.hi) << ','
       << num(r.entropy_amplitude) << ',' << num(r.mean_pressure) << ',' << num(amplitude) << ','
       << num(spec.post_amplitude_ref) << ','
       << num(amplitude / spec.post_amplitude_ref - 1.0) << '\n';
  }
  res.amplitude = rows.front().entropy_amplitude * rows.front().mean_pressure;
  if (rows.size() > 1) res.resampled_amplitude = rows.back().entropy_amplitude * rows.back().mean_pressure;

  log << "shock_entropy kappa=" << num(cfg.kappa) << " N=" << n << ": " << res.steps
      << " steps, filter fired " << res.filter_count << " times, shock at " << num(res.shock_x)
      << " (expected " << num(res.shock_expected) << "), amplitude " << num(res.amplitude) << '\n';
  return res;
}

void run_kernel_report(const RunConfig& cfg, std::ostream& log) {
  struct Entry {
    const char* label;
    dsc::KernelCoefficients taps;
  };
  const std::vector<Entry> entries = {
      {"q0", dsc::build_kernel({1.0, cfg.r_pred, cfg.half_width, 0}, dsc::Sampling::midpoint)},
      {"q1", dsc::build_kernel({1.0, cfg.r_highpass, cfg.half_width, 1})},
      {"q2", dsc::build_kernel({1.0, cfg.r_highpass, cfg.half_width, 2})},
  };
  auto spectra = open_out(cfg.output_dir, "spectra.csv");
  spectra << "filter,omega_over_pi,magnitude,ideal_magnitude\n";
  for (const auto& e : entries) {
    const auto fr = dsc::frequency_response(e.taps, cfg.spectrum_samples);
    for (std::size_t k = 0; k < fr.size(); ++k)
      spectra << e.label << ',' << num(fr.omega_over_pi[k]) << ',' << num(fr.magnitude(k)) << ','
              << num(fr.ideal_magnitude(k)) << '\n';
    auto taps = open_out(cfg.output_dir, std::string("taps_") + e.label + ".csv");
    dsc::write_taps_csv(taps, e.taps);
  }
  log << "kernel_report: spectra.csv and taps_q0/q1/q2.csv written to " << cfg.output_dir << '\n';
}

int run_command(const std::string& config_path, const std::optional<std::string>& output_dir,
                std::ostream& out, std::ostream& err) {
  std::optional<std::string> dir = output_dir;
  return guarded(config_path, dir, err, [&] {
    RunConfig cfg = load_config(config_path);
    if (output_dir) cfg.output_dir = *output_dir;
    dir = cfg.output_dir;
    prepare_dir(cfg);
    switch (cfg.kind) {
      case CaseKind::vortex: {
        const auto rows = run_vortex(cfg, out);
        if (rows.size() >= 2) print_table(out, rows);
        break;
      }
      case CaseKind::shock_entropy:
        run_shock_entropy(cfg, out);
        break;
      case CaseKind::kernel_report:
        run_kernel_report(cfg, out);
        break;
    }
  });
}

int table_command(const std::vector<std::string>& config_paths,
                  const std::optional<std::string>& output_dir, std::ostream& out,
                  std::ostream& err) {
  std::optional<std::string> dir = output_dir;
  const std::string label = config_paths.empty() ? std::string() : config_paths.front();
  return guarded(label, dir, err, [&] {
    if (config_paths.empty()) throw ConfigError("table: no configs given");
    std::vector<RunConfig> configs;
    for (const auto& path : config_paths) configs.push_back(load_config(path));
    const RunConfig& first = configs.front();
    for (const auto& c : configs) {
      if (c.kind != CaseKind::vortex)
        throw ConfigError(std::string("table: mismatched cases, got '") + to_string(c.kind) +
                          "' (tables need vortex configs)");
      if (c.cfl != first.cfl || c.t_final != first.t_final || c.lambda != first.lambda ||
          c.zeta != first.zeta || c.r_rest != first.r_rest || c.half_width != first.half_width ||
          c.r_highpass != first.r_highpass || c.r_pred != first.r_pred ||
          c.measure_scaling != first.measure_scaling ||
          c.filter_variables != first.filter_variables)
        throw ConfigError("table: configs differ in more than the grid size");
    }

    RunConfig merged = first;
    merged.n.clear();
    for (const auto& c : configs) merged.n.insert(merged.n.end(), c.n.begin(), c.n.end());
    std::sort(merged.n.begin(), merged.n.end());
    if (std::adjacent_find(merged.n.begin(), merged.n.end()) != merged.n.end())
      throw ConfigError("table: a grid size appears in more than one config");
    if (merged.n.size() < 2) throw ConfigError("table: convergence table needs at least two grids");
    if (output_dir) merged.output_dir = *output_dir;
    dir = merged.output_dir;
    prepare_dir(merged);
    print_table(out, run_vortex(merged, out));
  });
}

}  // namespace cfor::app
