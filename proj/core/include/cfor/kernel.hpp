#pragma once

#include <cstddef>
#include <vector>

namespace cfor::dsc {

/// Parameters of a regularized Shannon kernel: sin(pi x / delta) / (pi x / delta)
/// windowed by exp(-x^2 / (2 sigma^2)) with sigma = r * delta.
struct KernelParams {
  double delta = 1.0;  ///< grid spacing
  double r = 3.2;      ///< sigma / delta
  int half_width = 32; ///< taps on each side of the centre
  int order = 0;       ///< derivative order, 0..2

  double sigma() const { return r * delta; }

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

/// Where the kernel is sampled relative to the grid.
///
/// `on_grid` taps sit at integer multiples of delta (2W+1 taps); `midpoint`
/// taps sit at half-integer multiples (2W taps) and map grid values onto
/// cell midpoints.
enum class Sampling { on_grid, midpoint };

/// Sampled kernel taps. `offsets[k]` is the kernel argument in units of delta
/// and `values[k]` the kernel (or derivative) value there, already carrying the
/// 1/delta^order dimensional factor.
///
/// Applied as a true convolution: out(x) = sum_k values[k] * f(x - offsets[k] * delta).
struct KernelCoefficients {
  KernelParams params;
  Sampling sampling = Sampling::on_grid;
  std::vector<double> offsets;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double sum() const;
};

/// Evaluates the order-q kernel at the physical argument x.
double kernel_value(const KernelParams& params, double x);

/// Evaluates the order-q kernel at x = (whole + frac) * delta with frac in [0, 1).
/// The trigonometric factors are reduced to frac so that integer and
/// half-integer arguments are sampled exactly.
double kernel_value_split(const KernelParams& params, long whole, double frac);

KernelCoefficients build_kernel(const KernelParams& params,
                                Sampling sampling = Sampling::on_grid);

}  // namespace cfor::dsc
