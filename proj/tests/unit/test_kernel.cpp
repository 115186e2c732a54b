#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cfor/kernel.hpp"

using namespace cfor::dsc;

namespace {

constexpr double pi = std::numbers::pi;

// Generating function written out independently of the library.
double shannon(double x, double r) {
  if (x == 0.0) return 1.0;
  return std::sin(pi * x) / (pi * x) * std::exp(-x * x / (2.0 * r * r));
}

double tap_at(const KernelCoefficients& k, double offset) {
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k.offsets[j] == offset) return k.values[j];
  ADD_FAILURE() << "no tap at offset " << offset;
  return 0.0;
}

}  // namespace

TEST(Kernel, OnGridOrderZeroIsInterpolating) {
  const auto k = build_kernel({1.0, 3.2, 32, 0});
  ASSERT_EQ(k.size(), 65u);
  for (std::size_t j = 0; j < k.size(); ++j)
    EXPECT_EQ(k.values[j], k.offsets[j] == 0.0 ? 1.0 : 0.0) << "offset " << k.offsets[j];
}

TEST(Kernel, FirstDerivativeTapsAreOdd) {
  const auto k = build_kernel({1.0, 3.2, 32, 1});
  EXPECT_EQ(tap_at(k, 0.0), 0.0);
  for (int j = 1; j <= 32; ++j) EXPECT_EQ(tap_at(k, j), -tap_at(k, -j)) << j;
  EXPECT_LE(std::abs(k.sum()), 1e-12);
}

TEST(Kernel, FirstDerivativeTapAtOne) {
  const auto k = build_kernel({1.0, 3.2, 32, 1});
  EXPECT_NEAR(tap_at(k, 1.0), -std::exp(-0.048828125), 1e-15);
  EXPECT_NEAR(tap_at(k, 1.0), -0.95234, 1e-5);
}

TEST(Kernel, FirstDerivativeMatchesFiniteDifference) {
  const double h = 1e-6;
  const KernelParams p{1.0, 3.2, 32, 1};
  for (double x : {0.25, 1.0, 2.5, 7.0, 19.5}) {
    const double fd = (shannon(x + h, 3.2) - shannon(x - h, 3.2)) / (2.0 * h);
    EXPECT_NEAR(kernel_value(p, x), fd, 1e-8) << x;
  }
}

TEST(Kernel, SecondDerivativeMatchesFiniteDifference) {
  const double h = 1e-5;
  const auto k = build_kernel({1.0, 3.2, 32, 2});
  for (std::size_t j = 0; j < k.size(); ++j) {
    const double x = k.offsets[j];
    const double fd = (shannon(x + h, 3.2) - 2.0 * shannon(x, 3.2) + shannon(x - h, 3.2)) / (h * h);
    // the far taps are tiny, so compare relative to the largest tap
    EXPECT_NEAR(k.values[j], fd, 1e-5 * std::abs(tap_at(k, 0.0))) << "offset " << x;
    if (std::abs(fd) > 1e-3) EXPECT_NEAR(k.values[j] / fd, 1.0, 1e-5) << "offset " << x;
  }
  EXPECT_NEAR(tap_at(k, 0.0), -pi * pi / 3.0 - 1.0 / (3.2 * 3.2), 1e-14);
}

TEST(Kernel, EvenOrdersAreSymmetric) {
  for (int q : {0, 2}) {
    for (auto s : {Sampling::on_grid, Sampling::midpoint}) {
      const auto k = build_kernel({1.0, 3.2, 32, q}, s);
      const std::size_t n = k.size();
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(k.offsets[j], -k.offsets[n - 1 - j]);
        EXPECT_EQ(k.values[j], k.values[n - 1 - j]);
      }
    }
  }
}

TEST(Kernel, MidpointTapsSitAtHalfIntegers) {
  const auto k = build_kernel({1.0, 3.2, 32, 0}, Sampling::midpoint);
  ASSERT_EQ(k.size(), 64u);
  EXPECT_EQ(k.offsets.front(), -31.5);
  EXPECT_EQ(k.offsets.back(), 31.5);
  for (std::size_t j = 0; j < k.size(); ++j)
    EXPECT_NEAR(k.values[j], shannon(k.offsets[j], 3.2), 1e-15);
  EXPECT_NEAR(k.sum(), 1.0, 1e-10);
}

TEST(Kernel, TapsCarryTheSpacingFactor) {
  const double d = 0.1;
  const auto unit = build_kernel({1.0, 3.2, 32, 1});
  const auto scaled = build_kernel({d, 3.2, 32, 1});
  for (std::size_t j = 0; j < unit.size(); ++j)
    EXPECT_NEAR(scaled.values[j], unit.values[j] / d, 1e-12 * std::abs(unit.values[j] / d) + 1e-300);
  const auto unit2 = build_kernel({1.0, 3.2, 32, 2});
  const auto scaled2 = build_kernel({d, 3.2, 32, 2});
  EXPECT_NEAR(scaled2.values[32], unit2.values[32] / (d * d), 1e-10);
}

TEST(Kernel, FirstMomentReproducesIdentityDerivative) {
  const auto k = build_kernel({1.0, 3.2, 32, 1});
  // d/dx of f(x) = x via out = sum c_k f(x - o_k)
  double moment = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) moment += k.values[j] * (-k.offsets[j]);
  EXPECT_NEAR(moment, 1.0, 1e-8);
}

TEST(Kernel, SplitEvaluationAgreesWithDirect) {
  for (int q : {0, 1, 2}) {
    const KernelParams p{1.0, 2.5, 16, q};
    for (long whole : {-7L, -1L, 0L, 3L}) {
      for (double frac : {0.0, 0.25, 0.5, 0.8}) {
        const double x = static_cast<double>(whole) + frac;
        EXPECT_NEAR(kernel_value_split(p, whole, frac), kernel_value(p, x), 1e-12)
            << "q=" << q << " x=" << x;
      }
    }
  }
}

TEST(Kernel, RejectsInvalidParameters) {
  EXPECT_THROW(build_kernel({0.0, 3.2, 32, 1}), std::invalid_argument);
  EXPECT_THROW(build_kernel({1.0, -1.0, 32, 1}), std::invalid_argument);
  EXPECT_THROW(build_kernel({1.0, 3.2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(build_kernel({1.0, 3.2, 32, 3}), std::invalid_argument);
  EXPECT_THROW(build_kernel({1.0, 3.2, 32, -1}), std::invalid_argument);
}
