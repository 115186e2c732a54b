#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cfor::sensor {

/// High-frequency measure built from undecimated Haar details.
///
/// At scale m the detail at k is (1/m) * (sum of u[k+m .. k+2m-1] - sum of
/// u[k .. k+m-1]); the scale-m measure is the sum of absolute details. At
/// m = 1 this is the total variation with unit weight per jump, and the
/// threshold zeta is expressed in that unit.
struct SensorState {
  double last_measure = 0.0;
  double zeta = 0.0015;
  std::vector<int> scales{1};
  std::size_t field_selector = 0;  ///< conserved component measured (0 = density)
};

/// Throws std::invalid_argument for an empty field or a nonpositive scale.
double measure(std::span<const double> field, std::span<const int> scales, bool periodic = false);

/// Sum of line measures over every row and every column of an nx-by-ny
/// row-major array. A 1D field is ny = 1 and contributes rows only.
double measure_grid(std::span<const double> field, std::size_t nx, std::size_t ny,
                    std::span<const int> scales, bool periodic_x, bool periodic_y);

/// Fires when new_measure - last_measure exceeds zeta. The returned state
/// records new_measure; callers that filter replace it with the measure of
/// the filtered field.
std::pair<bool, SensorState> should_filter(const SensorState& state, double new_measure);

}  // namespace cfor::sensor
