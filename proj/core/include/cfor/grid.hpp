#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cfor/euler.hpp"

namespace cfor {

enum class BoundaryKind { periodic, ghost };

/// Conserved state outside the domain at coordinates (x, y).
using ExteriorState = std::function<euler::ConservedState(double x, double y)>;

struct BoundaryRule {
  BoundaryKind kind = BoundaryKind::periodic;
  ExteriorState exterior;

  static BoundaryRule periodic() { return {}; }
  static BoundaryRule ghost(ExteriorState fill) { return {BoundaryKind::ghost, std::move(fill)}; }
};

enum class Axis { x, y };

/// Uniform 1D or 2D node grid. Periodic axes exclude the duplicated end
/// node, so spacing is length / n; ghost axes include both end nodes.
struct Grid {
  int dims = 1;
  std::size_t nx = 1;
  std::size_t ny = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 0.0;
  double dx = 1.0, dy = 1.0;
  BoundaryRule boundary_x;
  BoundaryRule boundary_y;

  static Grid line(std::size_t nx, double x0, double x1, BoundaryRule bx);
  static Grid plane(std::size_t nx, std::size_t ny, double x0, double x1, double y0, double y1,
                    BoundaryRule bx, BoundaryRule by);

  double x(long i) const { return x0 + static_cast<double>(i) * dx; }
  double y(long j) const { return dims == 1 ? 0.0 : y0 + static_cast<double>(j) * dy; }
  std::size_t size() const { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }

  std::size_t extent(Axis a) const { return a == Axis::x ? nx : ny; }
  double spacing(Axis a) const { return a == Axis::x ? dx : dy; }
  const BoundaryRule& boundary(Axis a) const { return a == Axis::x ? boundary_x : boundary_y; }
  bool periodic(Axis a) const { return boundary(a).kind == BoundaryKind::periodic; }
};

/// Conserved variables (rho, rho u, rho v, E) at every grid node, stored
/// component-major.
class ConservedField {
 public:
  static constexpr std::size_t components = 4;

  explicit ConservedField(std::shared_ptr<const Grid> grid);
  explicit ConservedField(Grid grid) : ConservedField(std::make_shared<const Grid>(std::move(grid))) {}

  const Grid& grid() const { return *grid_; }
  const std::shared_ptr<const Grid>& grid_ptr() const { return grid_; }
  std::size_t size() const { return grid_->size(); }

  std::span<double> component(std::size_t c) { return {data_.data() + c * size(), size()}; }
  std::span<const double> component(std::size_t c) const {
    return {data_.data() + c * size(), size()};
  }
  double& at(std::size_t c, std::size_t i, std::size_t j = 0) {
    return data_[c * size() + grid_->index(i, j)];
  }
  double at(std::size_t c, std::size_t i, std::size_t j = 0) const {
    return data_[c * size() + grid_->index(i, j)];
  }

  euler::ConservedState state(std::size_t i, std::size_t j = 0) const;
  void set(std::size_t i, std::size_t j, const euler::ConservedState& U);

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  /// Sum of component c over all nodes (Neumaier-compensated).
  double total(std::size_t c) const;

  ConservedField& operator+=(const ConservedField& other);
  ConservedField& operator*=(double a);

  friend ConservedField operator+(ConservedField a, const ConservedField& b) { return a += b; }
  friend ConservedField operator*(double a, ConservedField f) { return f *= a; }

 private:
  std::shared_ptr<const Grid> grid_;
  std::vector<double> data_;
};

/// Fills every node from a primitive-state function of (x, y).
ConservedField sample(const Grid& grid, const euler::GasModel& gas,
                      const std::function<euler::PrimitiveState(double, double)>& state);

/// One grid line of all four conserved components with `width` exterior
/// values on either side. Element (c, k) for k in [-width, n + width).
struct GhostedLine {
  std::size_t n = 0;
  std::size_t width = 0;
  std::array<std::vector<double>, 4> q;

  double* origin(std::size_t c) { return q[c].data() + width; }
  const double* origin(std::size_t c) const { return q[c].data() + width; }
  double at(std::size_t c, long k) const { return origin(c)[k]; }
};

/// Copies row `line` (axis x) or column `line` (axis y) of U into `out`,
/// wrapping periodic axes and evaluating the exterior state on ghost axes.
/// Throws std::invalid_argument if a ghost axis has no exterior state.
void fill_ghosts(const ConservedField& U, Axis axis, std::size_t line, std::size_t width,
                 GhostedLine& out);
GhostedLine fill_ghosts(const ConservedField& U, Axis axis, std::size_t line, std::size_t width);

/// Writes the interior of `line` back into row/column `line` of U.
void store_line(const GhostedLine& line_values, Axis axis, std::size_t line, ConservedField& U);

}  // namespace cfor
