#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cfor/sensor.hpp"

using namespace cfor::sensor;

namespace {

const std::vector<int> haar{1};

double total_variation(const std::vector<double>& u, bool periodic) {
  double tv = 0.0;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) tv += std::abs(u[k + 1] - u[k]);
  if (periodic) tv += std::abs(u.front() - u.back());
  return tv;
}

std::vector<double> random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> u(n);
  for (auto& v : u) v = g(rng);
  return u;
}

}  // namespace

TEST(Sensor, ConstantFieldMeasuresZero) {
  const std::vector<double> c(40, 2.5);
  EXPECT_EQ(measure(c, haar), 0.0);
  const std::vector<int> multi{1, 2, 4};
  EXPECT_EQ(measure(c, multi, true), 0.0);
}

TEST(Sensor, AlternationMeasuresJumpCount) {
  for (std::size_t n : {2u, 7u, 64u}) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<double>(i % 2);
    EXPECT_DOUBLE_EQ(measure(u, haar), static_cast<double>(n - 1)) << n;
  }
}

TEST(Sensor, MonotoneRampMeasuresRange) {
  std::vector<double> u(101);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<double>(i) / 100.0;
  EXPECT_NEAR(measure(u, haar), 1.0, 1e-14);
}

TEST(Sensor, HaarSingleScaleEqualsTotalVariation) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = random_sequence(rng, len(rng));
    const bool periodic = trial % 2 == 1;
    const double tv = total_variation(u, periodic);
    EXPECT_NEAR(measure(u, haar, periodic), tv, 1e-12 * (1.0 + tv)) << trial;
  }
}

TEST(Sensor, ScaleAdditivity) {
  std::mt19937_64 rng(8);
  const std::vector<int> one{1}, two{2}, four{4}, all{1, 2, 4};
  for (bool periodic : {false, true}) {
    const auto u = random_sequence(rng, 97);
    const double sum = measure(u, one, periodic) + measure(u, two, periodic) + measure(u, four, periodic);
    EXPECT_NEAR(measure(u, all, periodic), sum, 1e-12 * sum);
  }
}

TEST(Sensor, TranslationInvariantWhenPeriodic) {
  std::mt19937_64 rng(21);
  const std::vector<int> scales{1, 2, 4};
  const auto u = random_sequence(rng, 64);
  const double base = measure(u, scales, true);
  for (std::size_t shift : {1u, 5u, 33u}) {
    auto v = u;
    std::rotate(v.begin(), v.begin() + static_cast<long>(shift), v.end());
    EXPECT_NEAR(measure(v, scales, true), base, 1e-12 * base) << shift;
  }
}

TEST(Sensor, Homogeneity) {
  std::mt19937_64 rng(3);
  const std::vector<int> scales{1, 2};
  const auto u = random_sequence(rng, 50);
  const double base = measure(u, scales);
  for (double c : {-3.0, 0.5, 1e4}) {
    auto v = u;
    for (auto& x : v) x *= c;
    EXPECT_NEAR(measure(v, scales), std::abs(c) * base, 1e-12 * std::abs(c) * base) << c;
  }
}

TEST(Sensor, GridMeasureSumsRowsAndColumns) {
  const std::size_t nx = 5, ny = 3;
  std::mt19937_64 rng(17);
  const auto u = random_sequence(rng, nx * ny);
  double expected = 0.0;
  for (std::size_t j = 0; j < ny; ++j)
    expected += total_variation({u.begin() + j * nx, u.begin() + (j + 1) * nx}, true);
  for (std::size_t i = 0; i < nx; ++i) {
    std::vector<double> col;
    for (std::size_t j = 0; j < ny; ++j) col.push_back(u[j * nx + i]);
    expected += total_variation(col, true);
  }
  EXPECT_NEAR(measure_grid(u, nx, ny, haar, true, true), expected, 1e-12 * expected);
  const std::vector<double> row(u.begin(), u.begin() + nx);
  EXPECT_DOUBLE_EQ(measure_grid(row, nx, 1, haar, false, false), total_variation(row, false));
}

TEST(Sensor, RejectsEmptyFieldAndBadScales) {
  const std::vector<double> empty;
  EXPECT_THROW(measure(empty, haar), std::invalid_argument);
  const std::vector<double> u{1.0, 2.0};
  const std::vector<int> zero{0};
  EXPECT_THROW(measure(u, zero), std::invalid_argument);
}

TEST(ShouldFilter, ThresholdExamples) {
  SensorState s;
  s.last_measure = 10.0;
  s.zeta = 0.001;
  EXPECT_FALSE(should_filter(s, 10.0005).first);
  const auto [fire, next] = should_filter(s, 10.002);
  EXPECT_TRUE(fire);
  EXPECT_EQ(next.last_measure, 10.002);
  EXPECT_EQ(next.zeta, s.zeta);
}

TEST(ShouldFilter, DecreasingMeasuresNeverFire) {
  SensorState s;
  s.last_measure = 5.0;
  s.zeta = 0.0005;
  for (double m = 5.0; m > 0.0; m -= 0.37) {
    const auto [fire, next] = should_filter(s, m);
    EXPECT_FALSE(fire) << m;
    s = next;
  }
}
