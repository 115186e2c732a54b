#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cfor/kernel.hpp"

namespace cfor::dsc {

/// Index arithmetic wraps around the sequence.
struct Periodic {};

/// Caller-supplied exterior values. `left` holds the values at indices
/// -n..-1 (farthest first), `right` the values at N..N+n-1.
struct GhostValues {
  std::vector<double> left;
  std::vector<double> right;
};

using BoundaryRule = std::variant<Periodic, GhostValues>;

/// Ghost values each side required by convolution and low-pass filtering
/// with half width w.
constexpr std::size_t required_ghosts(int half_width) { return 2 * static_cast<std::size_t>(half_width); }

/// Copies `data` into a buffer with `pad` exterior values on each side.
/// Element pad + i of the result is data[i].
std::vector<double> extend(std::span<const double> data, const BoundaryRule& boundary,
                           std::size_t pad);

/// Convolution weights reordered for a forward sweep:
/// out[i] = sum_t weights[t] * f[i + lo + t].
struct Stencil {
  std::vector<double> weights;
  int lo = 0;

  int hi() const { return lo + static_cast<int>(weights.size()) - 1; }

  /// On-grid kernels give out[i] ~ f^(q)(x_i); midpoint kernels give
  /// out[i] ~ f^(q)(x_i + delta/2).
  static Stencil from(const KernelCoefficients& k);

  /// Midpoint kernel applied to values living at x_{k+1/2}, producing values
  /// at the grid nodes x_i.
  static Stencil restoring(const KernelCoefficients& midpoint_kernel);
};

/// Sweeps `stencil` over `n` outputs. `origin` points at f[0]; the caller
/// guarantees f[lo] .. f[n - 1 + hi] are readable.
void convolve(const double* origin, std::size_t n, const Stencil& stencil, double* out);

/// Discrete singular convolution sum_k c_k f(x - o_k delta) at every node.
///
/// Throws std::invalid_argument for empty data or when a ghost boundary
/// supplies fewer than 2W values on either side.
std::vector<double> apply_convolution(std::span<const double> data,
                                      const KernelCoefficients& coeffs,
                                      const BoundaryRule& boundary);

/// Interpolative low-pass filter: grid values are predicted onto cell
/// midpoints and restored back onto the grid, each pass with its own q=0
/// midpoint kernel.
class LowPassFilter {
 public:
  LowPassFilter(const KernelParams& prediction, const KernelParams& restoration);

  /// Ghost values needed per side.
  std::size_t ghost_width() const { return ghost_width_; }

  std::vector<double> apply(std::span<const double> field, const BoundaryRule& boundary) const;

  /// Filters n values in place. `origin` points at f[0] inside a buffer that
  /// holds ghost_width() valid values on each side; `scratch` is resized as
  /// needed.
  void apply_padded(double* origin, std::size_t n, std::vector<double>& scratch) const;

  const KernelCoefficients& prediction() const { return prediction_; }
  const KernelCoefficients& restoration() const { return restoration_; }

 private:
  KernelCoefficients prediction_;
  KernelCoefficients restoration_;
  Stencil predict_;
  Stencil restore_;
  std::size_t ghost_width_;
};

std::vector<double> low_pass_filter(std::span<const double> field, const KernelParams& params,
                                    const BoundaryRule& boundary);

/// Evaluates the q=0 interpolant at fractional node positions `positions`
/// (units of delta, 0 = first node). Positions must lie in [0, N-1], or in
/// [0, N) for periodic data.
std::vector<double> interpolate(std::span<const double> field, std::span<const double> positions,
                                const KernelParams& params, const BoundaryRule& boundary);

/// Resamples N values onto M >= N equispaced nodes spanning the same
/// domain: [x_0, x_{N-1}] for ghost boundaries, [x_0, x_0 + N delta) for
/// periodic data.
std::vector<double> resample(std::span<const double> field, std::size_t target,
                             const KernelParams& params, const BoundaryRule& boundary);

}  // namespace cfor::dsc
