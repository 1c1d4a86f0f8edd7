#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "lgbell/nelder_mead.hpp"

using lgbell::nelder_mead;
using lgbell::NelderMeadOptions;

TEST(NelderMead, Rosenbrock) {
  auto f = [](std::span<const double> v) {
    const double a = 1.0 - v[0];
    const double b = v[1] - v[0] * v[0];
    return a * a + 100.0 * b * b;
  };
  const std::vector<double> start{-1.2, 1.0};
  const auto r = nelder_mead(f, start, 0.5);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
  EXPECT_LT(r.value, 1e-12);
}

TEST(NelderMead, QuadraticInEightDimensions) {
  auto f = [](std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i + 1.0) * (v[i] - 0.1 * i) * (v[i] - 0.1 * i);
    return s;
  };
  const std::vector<double> start(8, 1.0);
  const auto r = nelder_mead(f, start, 0.3);
  EXPECT_TRUE(r.converged);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(r.x[i], 0.1 * i, 1e-6);
}

TEST(NelderMead, NonFiniteValuesAreAvoided) {
  auto f = [](std::span<const double> v) {
    if (v[0] < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (v[0] - 0.5) * (v[0] - 0.5) + v[1] * v[1];
  };
  const std::vector<double> start{0.05, 0.3};
  const auto r = nelder_mead(f, start, 0.5);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_NEAR(r.x[0], 0.5, 1e-6);
}

TEST(NelderMead, IterationCapReportsNotConverged) {
  auto f = [](std::span<const double> v) { return v[0] * v[0] + v[1] * v[1]; };
  const std::vector<double> start{3.0, -2.0};
  NelderMeadOptions opts;
  opts.max_iters = 5;
  const auto r = nelder_mead(f, start, 1.0, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 5);
  EXPECT_GT(r.evaluations, 5);
}

TEST(NelderMead, RejectsBadInput) {
  auto f = [](std::span<const double> v) { return v[0]; };
  const std::vector<double> start{1.0};
  const std::vector<double> empty;
  EXPECT_THROW(nelder_mead(f, start, 0.0), std::invalid_argument);
  EXPECT_THROW(nelder_mead(f, start, -1.0), std::invalid_argument);
  EXPECT_THROW(nelder_mead(f, empty, 1.0), std::invalid_argument);
}
