#include <gtest/gtest.h>

#include <algorithm>

#include "equitangent/loci.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace equitangent;

namespace {

const ConvexBody kEllipse = SupportOval::ellipse(2, 1);
const ConvexPolygon kObtuse({{0, 0}, {4, 0}, {0.5, 1}});

std::array<int, 4> census(const std::vector<LocusComponent>& comps) {
  std::array<int, 4> c{};
  for (const auto& x : comps) ++c[static_cast<std::size_t>(x.kind)];
  return c;
}

constexpr std::array<int, 4> kObtuseCensus{1, 4, 0, 0};

// Even-odd point in polygon.
bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    if ((poly[i].y > p.y) != (poly[j].y > p.y) &&
        p.x < (poly[j].x - poly[i].x) * (p.y - poly[i].y) / (poly[j].y - poly[i].y) + poly[i].x) {
      in = !in;
    }
  }
  return in;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorKind::degenerate;
}

}  // namespace

TEST(EquitangentValue, EllipseAxesAreZero) {
  for (double x : {2.5, 3.0, 7.0}) EXPECT_NEAR(equitangent_value(kEllipse, {x, 0}), 0.0, 1e-9);
  for (double y : {1.5, 4.0}) EXPECT_NEAR(equitangent_value(kEllipse, {0, -y}), 0.0, 1e-9);
}

TEST(EquitangentValue, EllipseGenericMatchesPolarOracle) {
  fixtures::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Point a = fixtures::random_exterior(kEllipse, rng);
    const auto [left, right] = fixtures::ellipse_tangents(2, 1, a);
    EXPECT_NEAR(equitangent_value(kEllipse, a), distance(a, left) - distance(a, right), 1e-9);
  }
  EXPECT_GT(std::abs(equitangent_value(kEllipse, {3, 0.5})), 1e-3);
}

TEST(EquitangentValue, InsideIsNaN) {
  EXPECT_TRUE(std::isnan(equitangent_value(kEllipse, {0, 0})));
}

TEST(EquitangentValue, SideExtensionUsesOverlap) {
  // Beyond C on line BC; the opposite tangent touches A = (0, 0).
  const Point b{4, 0}, c{0.5, 1};
  for (double t : {0.2, 1.0, 3.0}) {
    const Point apex = c + (c - b) * t;
    const double lo = distance(apex, c), hi = distance(apex, b), opp = norm(apex);
    const double v = equitangent_value(kObtuse, apex);
    if (opp >= lo && opp <= hi) {
      EXPECT_EQ(v, 0.0);
    } else {
      EXPECT_NE(v, 0.0);
      EXPECT_NEAR(std::abs(v), std::min(std::abs(opp - lo), std::abs(opp - hi)), 1e-12);
    }
  }
}

TEST(TraceLocus, CircleIsDegenerate) {
  const ScalarField f = equitangent_field(SupportOval::circle(1.0));
  EXPECT_EQ(kind_of([&] { trace_locus(f, 64); }), ErrorKind::degenerate);
}

TEST(TraceLocus, RejectsCoarseGrids) {
  EXPECT_EQ(kind_of([] { trace_locus(equitangent_field(kEllipse), 32); }), ErrorKind::invalid_parameters);
}

TEST(TraceLocus, EllipseIsTheAxes) {
  const ScalarField f = equitangent_field(kEllipse, Box{{-6, -6}, {6, 6}});
  const auto comps = trace_locus(f, 512);
  ASSERT_EQ(comps.size(), 4u);
  for (const auto& c : comps) {
    EXPECT_EQ(c.kind, LocusKind::boundary_to_infinity);
    for (const Point& p : c.points) EXPECT_LT(std::min(std::abs(p.x), std::abs(p.y)), 1e-2);
  }
}

TEST(TraceLocus, EllipseDefaultBoxSameCensus) {
  const auto comps = trace_locus(equitangent_field(kEllipse), 256);
  EXPECT_EQ(census(comps), (std::array<int, 4>{0, 4, 0, 0}));
}

TEST(TraceLocus, ObtuseTriangleCensusStable) {
  const ScalarField f = equitangent_field(kObtuse);
  EXPECT_EQ(census(trace_locus(f, 512)), kObtuseCensus);
  EXPECT_EQ(census(trace_locus(f, 1024)), kObtuseCensus);
}

TEST(TraceLocus, ComponentsSortedByLeftmostPoint) {
  const auto comps = trace_locus(equitangent_field(kObtuse), 256);
  double last = -std::numeric_limits<double>::infinity();
  for (const auto& c : comps) {
    const double left = std::min_element(c.points.begin(), c.points.end(), [](Point a, Point b) {
                          return a.x < b.x;
                        })->x;
    EXPECT_GE(left, last);
    last = left;
  }
}

TEST(TraceLocus, PointsAreOnTheZeroSet) {
  fixtures::Rng rng(42);
  for (int i = 0; i < 3; ++i) {
    const SupportOval oval = fixtures::random_fourier(rng);
    const ScalarField f = equitangent_field(oval);
    const auto comps = trace_locus(f, 128);
    for (const auto& c : comps) {
      for (const Point& p : c.points) EXPECT_NEAR(f.eval(p), 0.0, 1e-7 * f.scale);
    }
  }
}

TEST(TraceLocus, BitangentCircleAtEveryPoint) {
  const auto comps = trace_locus(equitangent_field(SupportOval::fourier(1.0, {{0.1, 0.0}, {0.05, 0.02}, {0.02, 0.01}})), 128);
  ASSERT_FALSE(comps.empty());
  const SupportOval oval = SupportOval::fourier(1.0, {{0.1, 0.0}, {0.05, 0.02}, {0.02, 0.01}});
  for (const auto& c : comps) {
    for (const Point& a : c.points) {
      const TangentProbe p = tangent_probe(oval, a);
      // Normals at the tangency points are the perpendiculars to the tangent lines.
      const DirectedLine nl(p.left.point, perp(p.left.line.direction()));
      const DirectedLine nr(p.right.point, perp(p.right.line.direction()));
      const auto center = intersect_lines(nl, nr);
      if (!center) continue;
      const double rl = distance(*center, p.left.point), rr = distance(*center, p.right.point);
      EXPECT_NEAR(rl / rr, 1.0, 1e-6);
    }
  }
}

TEST(TriangleExact, ObtuseCensusAndTrace) {
  const ScalarField f = equitangent_field(kObtuse);
  const auto exact = triangle_locus_exact(kObtuse, f.domain);
  EXPECT_EQ(census(exact), kObtuseCensus);
  const auto traced = trace_locus(f, 1024);
  const double cell = f.domain.width() / 1024;
  for (const auto& c : traced) EXPECT_LE(max_distance_to(exact, c.points), 2 * cell);
  for (const auto& c : exact) {
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
      const Point mid = (c.points[i] + c.points[i + 1]) * 0.5;
      EXPECT_NEAR(equitangent_value(kObtuse, mid), 0.0, 1e-8 * f.scale);
    }
  }
}

TEST(TriangleExact, EquilateralBisectors) {
  const ConvexPolygon tri({{1, 0}, rotate({1, 0}, kTwoPi / 3), rotate({1, 0}, 2 * kTwoPi / 3)});
  const auto exact = triangle_locus_exact(tri);
  for (std::ptrdiff_t k = 0; k < 3; ++k) {
    const Point m = (tri.vertex(k) + tri.vertex(k + 1)) * 0.5;
    for (double t : {0.1, 1.0, 3.0}) {
      const Point p = m + m * t / norm(m);
      EXPECT_NEAR(equitangent_value(tri, p), 0.0, 1e-12);
      EXPECT_LT(max_distance_to(exact, {p}), 1e-9);
    }
  }
}

TEST(TriangleExact, BisectorsBeyondEachSide) {
  fixtures::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const ConvexPolygon tri = fixtures::random_polygon(rng, 3);
    for (std::ptrdiff_t k = 0; k < 3; ++k) {
      const Point x = tri.vertex(k), y = tri.vertex(k + 1);
      const Vec2 out = -perp(y - x);  // counterclockwise polygon: outward is to the right
      const Point p = (x + y) * 0.5 + out * 0.05;
      EXPECT_NEAR(equitangent_value(tri, p), 0.0, 1e-9 * norm(y - x));
    }
  }
}

TEST(TriangleExact, RejectsNonTriangles) {
  EXPECT_THROW(triangle_locus_exact(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), GeometryError);
}

TEST(Isoptic, CircleRightAngle) {
  for (const Point& p : isoptic(SupportOval::circle(1.0), kPi / 2, 256)) {
    EXPECT_NEAR(norm(p), std::sqrt(2.0), 1e-9);
  }
}

TEST(Isoptic, EllipseDirectorCircle) {
  for (const Point& p : isoptic(kEllipse, kPi / 2, 512)) EXPECT_NEAR(norm2(p), 5.0, 1e-3);
}

TEST(Isoptic, SeesTheBodyUnderTheAngle) {
  fixtures::Rng rng(44);
  for (int i = 0; i < 10; ++i) {
    const SupportOval oval = fixtures::random_oval(rng);
    const double phi = rng.uniform(0.3, 2.8);
    for (const Point& p : isoptic(oval, phi, 64)) EXPECT_NEAR(tangent_probe(oval, p).visual_angle(), phi, 1e-8);
  }
}

TEST(Isoptic, WiderAngleIsNested) {
  const auto outer = isoptic(kEllipse, 2.0, 512);
  for (const Point& p : isoptic(kEllipse, 3.0, 512)) EXPECT_TRUE(inside(outer, p));
}

TEST(Isoptic, PolygonsAndBadAnglesRejected) {
  EXPECT_THROW(isoptic(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}), 1.0, 64), GeometryError);
  EXPECT_EQ(kind_of([] { isoptic(kEllipse, 0.0, 64); }), ErrorKind::out_of_domain);
  EXPECT_EQ(kind_of([] { isoptic(kEllipse, kPi, 64); }), ErrorKind::out_of_domain);
}

TEST(EqualTangentPoints, EllipseRightAngle) {
  const auto pts = equal_tangent_points_on_isoptic(kEllipse, kPi / 2);
  ASSERT_EQ(pts.size(), 4u);
  for (const Point& p : pts) {
    EXPECT_NEAR(norm(p), std::sqrt(5.0), 1e-9);
    EXPECT_LT(std::min(std::abs(p.x), std::abs(p.y)), 1e-9);
  }
}

TEST(EqualTangentPoints, AtLeastFourOnRandomOvals) {
  fixtures::Rng rng(45);
  for (int i = 0; i < 10; ++i) {
    const SupportOval oval = fixtures::random_oval(rng);
    for (double phi : {kPi / 3, kPi / 2, 2 * kPi / 3}) {
      const auto pts = equal_tangent_points_on_isoptic(oval, phi, 2048);
      EXPECT_GE(pts.size(), 4u);
      for (const Point& p : pts) EXPECT_NEAR(equitangent_value(oval, p), 0.0, 1e-7 * oval.diameter());
    }
  }
}

TEST(EqualTangentPoints, CircleIsDegenerate) {
  EXPECT_EQ(kind_of([] { equal_tangent_points_on_isoptic(SupportOval::circle(1.0), 1.0); }), ErrorKind::degenerate);
}

TEST(EqualTangentPoints, ApproachVerticesAsAngleOpens) {
  const std::array<Point, 4> verts{{{2, 0}, {0, 1}, {-2, 0}, {0, -1}}};
  double last = std::numeric_limits<double>::infinity();
  for (double phi : {2.8, 3.0, 3.1}) {
    double worst = 0.0;
    for (const Point& p : equal_tangent_points_on_isoptic(kEllipse, phi)) {
      double best = std::numeric_limits<double>::infinity();
      for (const Point& v : verts) best = std::min(best, distance(p, v));
      worst = std::max(worst, best);
    }
    EXPECT_LT(worst, last) << phi;
    last = worst;
  }
}

TEST(Vertices, EllipseAtAxes) {
  const auto v = vertices(SupportOval::ellipse(2, 1));
  ASSERT_EQ(v.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(wrap_signed(v[i].theta - kPi / 2 * static_cast<double>(i))), 0.0, 1e-7);
  }
}

TEST(Vertices, TrefoilSixMatchesSampling) {
  const SupportOval f = SupportOval::fourier(1.0, {{0, 0}, {0, 0}, {0.1, 0}});
  const auto v = vertices(f);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(fixtures::count_sampled_extrema([&](double t) { return curvature(f, t); }, kTwoPi, 100000), 6);
  for (const auto& x : v) {
    // Extrema of 1 - 0.8 cos 3t sit at multiples of pi / 3.
    EXPECT_NEAR(std::abs(std::remainder(x.theta, kPi / 3)), 0.0, 1e-7);
  }
}

TEST(Vertices, RandomOvalsHaveAtLeastFour) {
  fixtures::Rng rng(46);
  for (int i = 0; i < 30; ++i) {
    const SupportOval oval = fixtures::random_fourier(rng);
    const auto v = vertices(oval);
    EXPECT_GE(v.size(), 4u);
    EXPECT_EQ(static_cast<int>(v.size()),
              fixtures::count_sampled_extrema([&](double t) { return curvature(oval, t); }, kTwoPi, 100000));
  }
}

TEST(Vertices, CircleIsDegenerate) {
  EXPECT_EQ(kind_of([] { vertices(SupportOval::circle(2.0)); }), ErrorKind::degenerate);
}

TEST(Diameters, EllipseAxes) {
  const auto d = diameters(SupportOval::ellipse(2, 1));
  ASSERT_EQ(d.size(), 2u);
  std::vector<double> lengths{d[0].length, d[1].length};
  std::sort(lengths.begin(), lengths.end());
  EXPECT_NEAR(lengths[0], 2.0, 1e-9);
  EXPECT_NEAR(lengths[1], 4.0, 1e-9);
}

TEST(Diameters, TrefoilHasConstantWidth) {
  // h(t) + h(t + pi) = 2 for 1 + 0.1 cos 3t: every chord through the origin is
  // a double normal, so there is no finite count.
  const SupportOval f = SupportOval::fourier(1.0, {{0, 0}, {0, 0}, {0.1, 0}});
  for (double t = 0; t < kPi; t += 0.01) EXPECT_NEAR(f.eval(t).h + f.eval(t + kPi).h, 2.0, 1e-14);
  EXPECT_EQ(kind_of([&] { diameters(f); }), ErrorKind::degenerate);
}

TEST(Diameters, ThreeFoldOvalHasSix) {
  // Width 2 + 0.004 cos 6t: three widest and three narrowest chords.
  const SupportOval f = SupportOval::fourier(1.0, {{0, 0}, {0, 0}, {0.1, 0}, {0, 0}, {0, 0}, {0.002, 0}});
  const auto d = diameters(f);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(fixtures::count_sampled_extrema([&](double t) { return f.eval(t).h + f.eval(t + kPi).h; }, kPi, 100000), 6);
}

TEST(Diameters, DoubleNormalsAreNormal) {
  fixtures::Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const SupportOval oval = fixtures::random_oval(rng);
    const auto d = diameters(oval);
    EXPECT_GE(d.size(), 2u);
    for (const auto& x : d) {
      const Vec2 chord = (x.second - x.first) / x.length;
      EXPECT_NEAR(std::abs(dot(chord, unit_vector(x.theta))), 1.0, 1e-8);
    }
  }
}

TEST(Diameters, CircleIsDegenerate) {
  EXPECT_EQ(kind_of([] { diameters(SupportOval::circle(1.0)); }), ErrorKind::degenerate);
}

TEST(SymmetrySet, CircleIsItsCenter) {
  const auto s = symmetry_set(SupportOval::circle(1.0).translated({0.5, -0.25}), 128);
  ASSERT_EQ(s.size(), 1u);
  ASSERT_EQ(s[0].pieces.size(), 1u);
  ASSERT_EQ(s[0].pieces[0].size(), 1u);
  EXPECT_NEAR(distance(s[0].pieces[0][0], {0.5, -0.25}), 0.0, 1e-12);
}

TEST(SymmetrySet, EllipseLiesOnTheAxes) {
  const auto s = symmetry_set(kEllipse, 256);
  ASSERT_EQ(s.size(), 2u);
  std::size_t unbounded = 0;
  for (const auto& branch : s) {
    unbounded += branch.unbounded.size();
    for (const auto& piece : branch.pieces) {
      for (const Point& p : piece) {
        // Centers of circles touching at two mirror points, inside the evolute.
        EXPECT_LT(std::min(std::abs(p.x), std::abs(p.y)), 1e-6);
        EXPECT_LE(std::abs(p.x), 1.5 + 1e-6);
        EXPECT_LE(std::abs(p.y), 3.0 + 1e-6);
      }
    }
  }
  EXPECT_GT(unbounded, 0u) << "the axes' end pairs have parallel normals";
}
