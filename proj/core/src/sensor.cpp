#include "cfor/sensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfor::sensor {

namespace {

double scale_measure(std::span<const double> u, int m, bool periodic) {
  const long n = static_cast<long>(u.size());
  const long width = 2L * m;
  const long count = periodic ? n : n - width + 1;
  if (count <= 0) return 0.0;
  auto at = [&](long k) { return u[static_cast<std::size_t>(((k % n) + n) % n)]; };
  const double inv_m = 1.0 / m;
  double total = 0.0;
  for (long k = 0; k < count; ++k) {
    double d = 0.0;
    for (long i = 0; i < m; ++i) d += at(k + m + i) - at(k + i);
    total += std::abs(d * inv_m);
  }
  return total;
}

}  // namespace

double measure(std::span<const double> field, std::span<const int> scales, bool periodic) {
  if (field.empty()) throw std::invalid_argument("sensor: empty field");
  double total = 0.0;
  for (int m : scales) {
    if (m < 1) throw std::invalid_argument("sensor: scale must be >= 1, got " + std::to_string(m));
    total += scale_measure(field, m, periodic);
  }
  return total;
}

double measure_grid(std::span<const double> field, std::size_t nx, std::size_t ny,
                    std::span<const int> scales, bool periodic_x, bool periodic_y) {
  if (field.size() != nx * ny || field.empty())
    throw std::invalid_argument("sensor: field shape mismatch");
  double total = 0.0;
  for (std::size_t j = 0; j < ny; ++j)
    total += measure(field.subspan(j * nx, nx), scales, periodic_x);
  if (ny > 1) {
    std::vector<double> column(ny);
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) column[j] = field[j * nx + i];
      total += measure(column, scales, periodic_y);
    }
  }
  return total;
}

std::pair<bool, SensorState> should_filter(const SensorState& state, double new_measure) {
  SensorState next = state;
  next.last_measure = new_measure;
  return {new_measure - state.last_measure > state.zeta, std::move(next)};
}

}  // namespace cfor::sensor
