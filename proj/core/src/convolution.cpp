#include "cfor/convolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cfor::dsc {

namespace {

std::size_t wrap(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

}  // namespace

std::vector<double> extend(std::span<const double> data, const BoundaryRule& boundary,
                           std::size_t pad) {
  if (data.empty()) throw std::invalid_argument("extend: empty sequence");
  const std::size_t n = data.size();
  std::vector<double> ext(n + 2 * pad);
  std::copy(data.begin(), data.end(), ext.begin() + static_cast<long>(pad));

  if (std::holds_alternative<Periodic>(boundary)) {
    for (std::size_t g = 0; g < pad; ++g) {
      ext[pad - 1 - g] = data[wrap(-1 - static_cast<long>(g), n)];
      ext[pad + n + g] = data[wrap(static_cast<long>(n + g), n)];
    }
    return ext;
  }

  const auto& ghosts = std::get<GhostValues>(boundary);
  if (ghosts.left.size() < pad || ghosts.right.size() < pad)
    throw std::invalid_argument("extend: ghost boundary needs " + std::to_string(pad) +
                                " values per side, got " + std::to_string(ghosts.left.size()) +
                                " / " + std::to_string(ghosts.right.size()));
  for (std::size_t g = 0; g < pad; ++g) {
    ext[pad - 1 - g] = ghosts.left[ghosts.left.size() - 1 - g];
    ext[pad + n + g] = ghosts.right[g];
  }
  return ext;
}

Stencil Stencil::from(const KernelCoefficients& k) {
  // out[i] = sum_k c_k f(x_i + shift - o_k delta) reads f[i + shift - o_k].
  const double shift = k.sampling == Sampling::midpoint ? 0.5 : 0.0;
  Stencil s;
  const std::size_t n = k.size();
  s.weights.resize(n);
  // offsets ascend, so index offsets descend
  s.lo = static_cast<int>(std::lround(shift - k.offsets.back()));
  for (std::size_t t = 0; t < n; ++t) s.weights[t] = k.values[n - 1 - t];
  return s;
}

Stencil Stencil::restoring(const KernelCoefficients& midpoint_kernel) {
  if (midpoint_kernel.sampling != Sampling::midpoint)
    throw std::invalid_argument("restoring stencil needs a midpoint kernel");
  // g[k] lives at x_{k+1/2}; x_i - (m + 1/2) delta is the midpoint of cell i - m - 1.
  Stencil s = from(midpoint_kernel);
  s.lo -= 1;
  return s;
}

void convolve(const double* origin, std::size_t n, const Stencil& stencil, double* out) {
  const double* w = stencil.weights.data();
  const std::size_t taps = stencil.weights.size();
  const double* base = origin + stencil.lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double* f = base + i;
    double acc = 0.0;
    for (std::size_t t = 0; t < taps; ++t) acc += w[t] * f[t];
    out[i] = acc;
  }
}

std::vector<double> apply_convolution(std::span<const double> data,
                                      const KernelCoefficients& coeffs,
                                      const BoundaryRule& boundary) {
  const std::size_t pad = required_ghosts(coeffs.params.half_width);
  const auto ext = extend(data, boundary, pad);
  std::vector<double> out(data.size());
  convolve(ext.data() + pad, data.size(), Stencil::from(coeffs), out.data());
  return out;
}

LowPassFilter::LowPassFilter(const KernelParams& prediction, const KernelParams& restoration) {
  if (prediction.order != 0 || restoration.order != 0)
    throw std::invalid_argument("low-pass filter kernels must have order 0");
  prediction_ = build_kernel(prediction, Sampling::midpoint);
  restoration_ = build_kernel(restoration, Sampling::midpoint);
  predict_ = Stencil::from(prediction_);
  restore_ = Stencil::restoring(restoration_);
  ghost_width_ = static_cast<std::size_t>(prediction.half_width + restoration.half_width);
}

void LowPassFilter::apply_padded(double* origin, std::size_t n, std::vector<double>& scratch) const {
  // Restoration of node i reads midpoints i + restore_.lo .. i + restore_.hi.
  const long first = restore_.lo;
  const long count = static_cast<long>(n) - 1 + restore_.hi() - first + 1;
  scratch.resize(static_cast<std::size_t>(count));
  convolve(origin + first, static_cast<std::size_t>(count), predict_, scratch.data());
  convolve(scratch.data() - first, n, restore_, origin);
}

std::vector<double> LowPassFilter::apply(std::span<const double> field,
                                         const BoundaryRule& boundary) const {
  auto ext = extend(field, boundary, ghost_width_);
  std::vector<double> scratch;
  apply_padded(ext.data() + ghost_width_, field.size(), scratch);
  return {ext.begin() + static_cast<long>(ghost_width_),
          ext.begin() + static_cast<long>(ghost_width_ + field.size())};
}

std::vector<double> low_pass_filter(std::span<const double> field, const KernelParams& params,
                                    const BoundaryRule& boundary) {
  return LowPassFilter(params, params).apply(field, boundary);
}

std::vector<double> interpolate(std::span<const double> field, std::span<const double> positions,
                                const KernelParams& params, const BoundaryRule& boundary) {
  params.validate();
  const std::size_t n = field.size();
  if (n == 0) throw std::invalid_argument("interpolate: empty sequence");
  const bool periodic = std::holds_alternative<Periodic>(boundary);
  const double upper = periodic ? static_cast<double>(n) : static_cast<double>(n - 1);

  const int w = params.half_width;
  const std::size_t pad = required_ghosts(w);
  const auto ext = extend(field, boundary, pad);
  const double* origin = ext.data() + pad;

  std::vector<double> out(positions.size());
  for (std::size_t m = 0; m < positions.size(); ++m) {
    const double p = positions[m];
    const bool inside = periodic ? (p >= 0.0 && p < upper) : (p >= 0.0 && p <= upper);
    if (!inside)
      throw std::invalid_argument("interpolate: target position " + std::to_string(p) +
                                  " outside the source domain");
    const double whole = std::floor(p);
    const long base = static_cast<long>(whole);
    const double frac = p - whole;
    double acc = 0.0;
    for (long k = base - w + 1; k <= base + w; ++k)
      acc += kernel_value_split(params, base - k, frac) * origin[k];
    out[m] = acc;
  }
  return out;
}

std::vector<double> resample(std::span<const double> field, std::size_t target,
                             const KernelParams& params, const BoundaryRule& boundary) {
  const std::size_t n = field.size();
  if (n < 2) throw std::invalid_argument("resample: need at least two source values");
  if (target < n)
    throw std::invalid_argument("resample: target size " + std::to_string(target) +
                                " smaller than source size " + std::to_string(n));
  const bool periodic = std::holds_alternative<Periodic>(boundary);
  std::vector<double> positions(target);
  for (std::size_t m = 0; m < target; ++m) {
    positions[m] = periodic
        ? static_cast<double>(m * n) / static_cast<double>(target)
        : static_cast<double>(m * (n - 1)) / static_cast<double>(target - 1);
  }
  return interpolate(field, positions, params, boundary);
}

}  // namespace cfor::dsc
