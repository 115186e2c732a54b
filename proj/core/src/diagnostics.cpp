#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cfor/cases.hpp"

namespace cfor::cases {

ErrorReport error_norms(std::span<const double> numerical, std::span<const double> exact) {
  if (numerical.size() != exact.size())
    throw std::invalid_argument("error_norms: shape mismatch (" + std::to_string(numerical.size()) +
                                " vs " + std::to_string(exact.size()) + ")");
  if (numerical.empty()) throw std::invalid_argument("error_norms: empty fields");
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  for (std::size_t k = 0; k < numerical.size(); ++k) {
    const double e = std::abs(numerical[k] - exact[k]);
    abs_sum += e;
    sq_sum += e * e;
  }
  const double m = static_cast<double>(numerical.size());
  return {abs_sum / m, std::sqrt(sq_sum) / std::sqrt(m), std::nullopt, std::nullopt};
}

std::vector<double> closed_periodic(std::span<const double> field, std::size_t nx, std::size_t ny) {
  if (field.size() != nx * ny) throw std::invalid_argument("closed_periodic: shape mismatch");
  std::vector<double> out((nx + 1) * (ny + 1));
  for (std::size_t j = 0; j <= ny; ++j)
    for (std::size_t i = 0; i <= nx; ++i)
      out[j * (nx + 1) + i] = field[(j % ny) * nx + (i % nx)];
  return out;
}

double convergence_order(double coarse_error, double fine_error, std::size_t n_coarse,
                         std::size_t n_fine) {
  if (n_fine <= n_coarse) throw std::invalid_argument("convergence_order: grids not refined");
  return std::log(coarse_error / fine_error) /
         std::log(static_cast<double>(n_fine) / static_cast<double>(n_coarse));
}

std::vector<ConvergenceRow> convergence_table(std::vector<ConvergenceRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("convergence table needs at least two grids");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& coarse = rows[k - 1];
    auto& fine = rows[k];
    fine.errors.order_l1 = convergence_order(coarse.errors.l1, fine.errors.l1, coarse.n, fine.n);
    fine.errors.order_l2 = convergence_order(coarse.errors.l2, fine.errors.l2, coarse.n, fine.n);
  }
  return rows;
}

std::vector<double> entropy_field(const ConservedField& U, const euler::GasModel& gas) {
  std::vector<double> s(U.size());
  const auto& g = U.grid();
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const auto w = euler::to_primitive(U.state(i, j), gas);
      s[g.index(i, j)] = (std::log(w.p) - gas.gamma * std::log(w.rho)) / gas.gamma;
    }
  }
  return s;
}

std::vector<double> pressure_field(const ConservedField& U, const euler::GasModel& gas) {
  std::vector<double> p(U.size());
  const auto& g = U.grid();
  for (std::size_t j = 0; j < g.ny; ++j)
    for (std::size_t i = 0; i < g.nx; ++i)
      p[g.index(i, j)] = euler::to_primitive(U.state(i, j), gas).p;
  return p;
}

double shock_position(const ConservedField& U) {
  const auto rho = U.component(0);
  const auto& g = U.grid();
  if (g.nx < 2) throw std::invalid_argument("shock_position: need at least two nodes");
  double largest = 0.0;
  double scale = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < g.nx; ++i) {
    const double jump = std::abs(rho[i + 1] - rho[i]);
    scale = std::max(scale, std::abs(rho[i]));
    if (jump > largest) {
      largest = jump;
      at = i;
    }
  }
  if (!(largest > 1e-12 * std::max(scale, 1.0)))
    throw std::runtime_error("shock_position: no density jump above round-off");
  return g.x(static_cast<long>(at)) + 0.5 * g.dx;
}

MeasurementWindow postshock_window(const ShockEntropySpec& spec, const euler::GasModel& gas,
                                   double t, double shock_x, double lead, double trail) {
  const double wavelength = generated_wavelength(spec, gas);
  const double contact = spec.interface + spec.post.u * t;
  return {contact + trail * wavelength, shock_x - lead * wavelength, wavelength};
}

double window_mean(std::span<const double> x, std::span<const double> values,
                   const MeasurementWindow& window) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= window.lo && x[i] <= window.hi) {
      sum += values[i];
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("window_mean: window holds no nodes");
  return sum / static_cast<double>(count);
}

double postshock_amplitude(std::span<const double> x, std::span<const double> s,
                           const MeasurementWindow& window) {
  if (x.size() != s.size()) throw std::invalid_argument("postshock_amplitude: shape mismatch");
  if (!(window.hi - window.lo >= 3.0 * window.wavelength))
    throw std::invalid_argument("postshock_amplitude: window [" + std::to_string(window.lo) + ", " +
                                std::to_string(window.hi) + "] shorter than three wavelengths");

  const double mean = window_mean(x, s, window);
  double peaks = 0.0;
  double troughs = 0.0;
  std::size_t n_peaks = 0;
  std::size_t n_troughs = 0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    if (x[i - 1] < window.lo || x[i + 1] > window.hi) continue;
    const double v = s[i] - mean;
    if (s[i] > s[i - 1] && s[i] >= s[i + 1] && v > 0.0) {
      peaks += v;
      ++n_peaks;
    } else if (s[i] < s[i - 1] && s[i] <= s[i + 1] && v < 0.0) {
      troughs += v;
      ++n_troughs;
    }
  }
  if (n_peaks == 0 || n_troughs == 0) return 0.0;
  return 0.5 * (peaks / static_cast<double>(n_peaks) - troughs / static_cast<double>(n_troughs));
}

}  // namespace cfor::cases
