#include <gtest/gtest.h>

#include <cmath>

#include "equitangent/contour.hpp"

using namespace equitangent;

namespace {

double circle_field(Point p) { return norm2(p) - 1.0; }

}  // namespace

TEST(TraceZeroSet, CircleIsOneClosedLoop) {
  const int n = 64;
  const double h = 3.0 / n;
  const NodeGrid g = sample_grid({-1.5, -1.5}, h, h, n + 1, n + 1, circle_field);
  ContourOptions opt;
  opt.evaluate = circle_field;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].closed);
  for (const Point& p : lines[0].points) EXPECT_NEAR(norm(p), 1.0, 1e-9);
}

TEST(TraceZeroSet, LinearFallbackWithoutEvaluator) {
  const int n = 64;
  const double h = 3.0 / n;
  const NodeGrid g = sample_grid({-1.5, -1.5}, h, h, n + 1, n + 1, circle_field);
  const auto lines = trace_zero_set(g, {});
  ASSERT_EQ(lines.size(), 1u);
  for (const Point& p : lines[0].points) EXPECT_NEAR(norm(p), 1.0, h * h);
}

TEST(TraceZeroSet, OpenLineAcrossTheGrid) {
  auto f = [](Point p) { return p.y - 0.3 * p.x - 0.1; };
  const NodeGrid g = sample_grid({-1, -1}, 0.05, 0.05, 41, 41, f);
  ContourOptions opt;
  opt.evaluate = f;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_FALSE(lines[0].closed);
  const Point a = lines[0].points.front(), b = lines[0].points.back();
  EXPECT_NEAR(std::abs(a.x - b.x), 2.0, 0.05 + 1e-9);
  for (const Point& p : lines[0].points) EXPECT_NEAR(f(p), 0.0, 1e-10);
}

TEST(TraceZeroSet, TwoCirclesTwoLoops) {
  auto f = [](Point p) { return std::min(norm(p - Point{-1, 0}), norm(p - Point{1.2, 0.3})) - 0.5; };
  const NodeGrid g = sample_grid({-2, -2}, 0.04, 0.04, 101, 101, f);
  ContourOptions opt;
  opt.evaluate = f;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_TRUE(lines[0].closed);
  EXPECT_TRUE(lines[1].closed);
}

TEST(TraceZeroSet, SaddleStaysConsistent) {
  // xy = c has two branches; whatever the saddle choice, two open chains.
  auto f = [](Point p) { return p.x * p.y - 0.01; };
  const NodeGrid g = sample_grid({-1, -1}, 0.1, 0.1, 21, 21, f);
  ContourOptions opt;
  opt.evaluate = f;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& l : lines) {
    EXPECT_FALSE(l.closed);
    const bool first_quadrant = l.points.front().x > 0;
    for (const Point& p : l.points) EXPECT_EQ(p.x > 0, first_quadrant);
  }
}

TEST(TraceZeroSet, MaskedRegionEndsChains) {
  auto f = [](Point p) {
    if (norm(p) < 0.4) return std::nan("");
    return p.y;
  };
  const NodeGrid g = sample_grid({-1, -1}, 0.05, 0.05, 41, 41, f);
  ContourOptions opt;
  opt.evaluate = f;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& l : lines) {
    EXPECT_FALSE(l.closed);
    for (const Point& p : l.points) EXPECT_GE(norm(p), 0.4 - 1e-12);
  }
}

TEST(TraceZeroSet, PeriodicDiagonalsWrap) {
  // sin(t - s) vanishes on t = s and t = s + pi: two loops of class (1, 1).
  const int n = 64;
  const double h = kTwoPi / n;
  auto f = [](Point p) { return std::sin(p.y - p.x); };
  const NodeGrid g = sample_grid({0, 0.5 * h}, h, h, n, n, f);
  ContourOptions opt;
  opt.periodic = true;
  opt.evaluate = f;
  const auto lines = trace_zero_set(g, opt);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& l : lines) {
    EXPECT_TRUE(l.closed);
    // Unwrapped: consecutive points are adjacent, and the loop advances one
    // period in both coordinates.
    for (std::size_t i = 1; i < l.points.size(); ++i) EXPECT_LT(distance(l.points[i], l.points[i - 1]), 2 * h);
    const Point d = l.points.back() - l.points.front();
    EXPECT_NEAR(std::abs(d.x), kTwoPi, 2 * h);
    EXPECT_NEAR(std::abs(d.y), kTwoPi, 2 * h);
  }
}
