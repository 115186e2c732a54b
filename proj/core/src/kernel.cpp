#include "cfor/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cfor::dsc {

namespace {

constexpr double pi = std::numbers::pi;

// Kernel of order q at dimensionless argument s = x / delta, given
// sin(pi s) and cos(pi s). Result excludes the 1/delta^q factor.
double evaluate(int order, double r, double s, double sin_ps, double cos_ps) {
  const double inv_r2 = 1.0 / (r * r);
  const double window = std::exp(-0.5 * s * s * inv_r2);
  if (s == 0.0) {
    switch (order) {
      case 0: return 1.0;
      case 1: return 0.0;
      default: return -pi * pi / 3.0 - inv_r2;
    }
  }
  const double shannon = sin_ps / (pi * s);
  const double d_shannon = cos_ps / s - sin_ps / (pi * s * s);
  switch (order) {
    case 0:
      return shannon * window;
    case 1:
      // d/ds [S G] = S' G + S G', G' = -s/r^2 G
      return d_shannon * window - sin_ps * window * inv_r2 / pi;
    default: {
      const double dd_shannon = -pi * sin_ps / s - 2.0 * cos_ps / (s * s) +
                                2.0 * sin_ps / (pi * s * s * s);
      const double d_window = -s * inv_r2 * window;
      const double dd_window = (s * s * inv_r2 * inv_r2 - inv_r2) * window;
      return dd_shannon * window + 2.0 * d_shannon * d_window + shannon * dd_window;
    }
  }
}

double scale(const KernelParams& p) { return std::pow(p.delta, -p.order); }

double parity(int order) { return order == 1 ? -1.0 : 1.0; }

}  // namespace

void KernelParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("kernel: grid spacing must be positive, got " +
                                std::to_string(delta));
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("kernel: r must be positive, got " + std::to_string(r));
  if (half_width < 1)
    throw std::invalid_argument("kernel: half width must be >= 1, got " +
                                std::to_string(half_width));
  if (order < 0 || order > 2)
    throw std::invalid_argument("kernel: derivative order must be 0, 1 or 2, got " +
                                std::to_string(order));
}

double KernelCoefficients::sum() const {
  // Pairwise from the outside in so symmetric taps meet with equal magnitude.
  double total = 0.0;
  std::size_t lo = 0;
  std::size_t hi = values.size();
  while (hi - lo > 1) {
    total += values[lo] + values[hi - 1];
    ++lo;
    --hi;
  }
  if (hi > lo) total += values[lo];
  return total;
}

double kernel_value_split(const KernelParams& params, long whole, double frac) {
  params.validate();
  double sin_f;
  double cos_f;
  if (frac == 0.0) {
    sin_f = 0.0;
    cos_f = 1.0;
  } else if (frac == 0.5) {
    sin_f = 1.0;
    cos_f = 0.0;
  } else {
    sin_f = std::sin(pi * frac);
    cos_f = std::cos(pi * frac);
  }
  const double sign = (whole % 2 == 0) ? 1.0 : -1.0;
  const double s = static_cast<double>(whole) + frac;
  return evaluate(params.order, params.r, s, sign * sin_f, sign * cos_f) * scale(params);
}

double kernel_value(const KernelParams& params, double x) {
  const double s = x / params.delta;
  const double whole = std::floor(s);
  return kernel_value_split(params, static_cast<long>(whole), s - whole);
}

KernelCoefficients build_kernel(const KernelParams& params, Sampling sampling) {
  params.validate();
  const int w = params.half_width;
  const double factor = scale(params);
  const double sign = parity(params.order);

  KernelCoefficients k;
  k.params = params;
  k.sampling = sampling;

  if (sampling == Sampling::on_grid) {
    k.offsets.resize(2 * w + 1);
    k.values.resize(2 * w + 1);
    for (int j = 0; j <= w; ++j) {
      // sin(pi j) = 0, cos(pi j) = (-1)^j
      const double c = (j % 2 == 0) ? 1.0 : -1.0;
      const double v = evaluate(params.order, params.r, j, 0.0, c) * factor;
      k.offsets[w + j] = j;
      k.offsets[w - j] = -j;
      k.values[w + j] = v;
      k.values[w - j] = sign * v;
    }
    k.values[w] = evaluate(params.order, params.r, 0.0, 0.0, 1.0) * factor;
  } else {
    k.offsets.resize(2 * w);
    k.values.resize(2 * w);
    for (int m = 0; m < w; ++m) {
      // s = m + 1/2: sin(pi s) = (-1)^m, cos(pi s) = 0
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const double s = m + 0.5;
      const double v = evaluate(params.order, params.r, s, sgn, 0.0) * factor;
      k.offsets[w + m] = s;
      k.offsets[w - 1 - m] = -s;
      k.values[w + m] = v;
      k.values[w - 1 - m] = sign * v;
    }
  }
  return k;
}

}  // namespace cfor::dsc
