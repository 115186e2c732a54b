#include "cfor/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfor {

namespace {

double spacing_for(std::size_t n, double lo, double hi, const BoundaryRule& b) {
  if (!(hi > lo)) throw std::invalid_argument("grid: empty domain");
  if (b.kind == BoundaryKind::periodic) {
    if (n < 1) throw std::invalid_argument("grid: need at least one node");
    return (hi - lo) / static_cast<double>(n);
  }
  if (n < 2) throw std::invalid_argument("grid: need at least two nodes");
  return (hi - lo) / static_cast<double>(n - 1);
}

}  // namespace

Grid Grid::line(std::size_t nx, double x0, double x1, BoundaryRule bx) {
  Grid g;
  g.dims = 1;
  g.nx = nx;
  g.ny = 1;
  g.x0 = x0;
  g.x1 = x1;
  g.dx = spacing_for(nx, x0, x1, bx);
  g.dy = g.dx;
  g.boundary_x = std::move(bx);
  return g;
}

Grid Grid::plane(std::size_t nx, std::size_t ny, double x0, double x1, double y0, double y1,
                 BoundaryRule bx, BoundaryRule by) {
  Grid g;
  g.dims = 2;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.dx = spacing_for(nx, x0, x1, bx);
  g.dy = spacing_for(ny, y0, y1, by);
  g.boundary_x = std::move(bx);
  g.boundary_y = std::move(by);
  return g;
}

ConservedField::ConservedField(std::shared_ptr<const Grid> grid)
    : grid_(std::move(grid)), data_(components * grid_->size(), 0.0) {}

euler::ConservedState ConservedField::state(std::size_t i, std::size_t j) const {
  return {at(0, i, j), at(1, i, j), at(2, i, j), at(3, i, j)};
}

void ConservedField::set(std::size_t i, std::size_t j, const euler::ConservedState& U) {
  at(0, i, j) = U.rho;
  at(1, i, j) = U.mx;
  at(2, i, j) = U.my;
  at(3, i, j) = U.E;
}

double ConservedField::total(std::size_t c) const {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : component(c)) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

ConservedField& ConservedField::operator+=(const ConservedField& other) {
  if (other.data_.size() != data_.size()) throw std::invalid_argument("field size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ConservedField& ConservedField::operator*=(double a) {
  for (double& v : data_) v *= a;
  return *this;
}

ConservedField sample(const Grid& grid, const euler::GasModel& gas,
                      const std::function<euler::PrimitiveState(double, double)>& state) {
  ConservedField U(grid);
  for (std::size_t j = 0; j < grid.ny; ++j)
    for (std::size_t i = 0; i < grid.nx; ++i)
      U.set(i, j, euler::to_conserved(state(grid.x(static_cast<long>(i)), grid.y(static_cast<long>(j))), gas));
  return U;
}

void fill_ghosts(const ConservedField& U, Axis axis, std::size_t line, std::size_t width,
                 GhostedLine& out) {
  const Grid& g = U.grid();
  const std::size_t n = g.extent(axis);
  const BoundaryRule& rule = g.boundary(axis);
  if (rule.kind == BoundaryKind::ghost && !rule.exterior)
    throw std::invalid_argument("fill_ghosts: ghost boundary without an exterior state");

  out.n = n;
  out.width = width;
  for (auto& v : out.q) v.resize(n + 2 * width);

  auto node = [&](std::size_t k) {
    return axis == Axis::x ? g.index(k, line) : g.index(line, k);
  };
  for (std::size_t c = 0; c < 4; ++c) {
    const auto src = U.component(c);
    double* o = out.origin(c);
    for (std::size_t k = 0; k < n; ++k) o[k] = src[node(k)];
  }

  const long ln = static_cast<long>(n);
  for (long k = -static_cast<long>(width); k < ln + static_cast<long>(width); ++k) {
    if (k >= 0 && k < ln) continue;
    if (rule.kind == BoundaryKind::periodic) {
      const std::size_t src = static_cast<std::size_t>(((k % ln) + ln) % ln);
      for (std::size_t c = 0; c < 4; ++c) out.origin(c)[k] = out.origin(c)[src];
    } else {
      const double x = axis == Axis::x ? g.x(k) : g.x(static_cast<long>(line));
      const double y = axis == Axis::x ? g.y(static_cast<long>(line)) : g.y(k);
      const auto s = rule.exterior(x, y);
      out.origin(0)[k] = s.rho;
      out.origin(1)[k] = s.mx;
      out.origin(2)[k] = s.my;
      out.origin(3)[k] = s.E;
    }
  }
}

GhostedLine fill_ghosts(const ConservedField& U, Axis axis, std::size_t line, std::size_t width) {
  GhostedLine out;
  fill_ghosts(U, axis, line, width, out);
  return out;
}

void store_line(const GhostedLine& values, Axis axis, std::size_t line, ConservedField& U) {
  const Grid& g = U.grid();
  for (std::size_t c = 0; c < 4; ++c) {
    auto dst = U.component(c);
    const double* o = values.origin(c);
    for (std::size_t k = 0; k < values.n; ++k)
      dst[axis == Axis::x ? g.index(k, line) : g.index(line, k)] = o[k];
  }
}

}  // namespace cfor
