#include <gtest/gtest.h>

#include "equitangent/bodies.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace equitangent;
using fixtures::Rng;

namespace {

ConvexPolygon unit_square() { return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

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

TEST(Validate, SquareOrientation) {
  EXPECT_TRUE(validate(unit_square()));
  const Diagnostics cw = validate(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  EXPECT_FALSE(cw);
  EXPECT_EQ(cw.invariant, "orientation");
}

TEST(Validate, NonConvexSupport) {
  const Diagnostics d = validate(SupportOval::fourier(1.0, {{0.0, 0.0}, {0.6, 0.0}}));
  EXPECT_FALSE(d);
  EXPECT_NE(d.invariant.find("h+h"), std::string::npos) << d.invariant;
}

TEST(Validate, PolygonInvariants) {
  EXPECT_FALSE(validate(ConvexPolygon({{0, 0}, {1, 0}})));
  EXPECT_FALSE(validate(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}})));
  EXPECT_FALSE(validate(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}})));
  EXPECT_FALSE(validate(ConvexPolygon({{0, 0}, {2, 0}, {0.5, 0.5}, {0, 2}})));
}

TEST(TangentProbe, CircleIsSymmetric) {
  const TangentProbe p = tangent_probe(SupportOval::circle(1.0), {2, 0});
  EXPECT_NEAR(p.left.length, std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(p.right.length, std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(p.alpha, p.beta, 1e-9);
  // Facing the body along -x, the left hand points to -y.
  EXPECT_LT(p.left.point.y, 0.0);
  EXPECT_GT(p.right.point.y, 0.0);
}

TEST(TangentProbe, SquareFromTheSide) {
  const TangentProbe p = tangent_probe(unit_square(), {2, 0.5});
  EXPECT_NEAR(distance(p.left.point, {1, 0}), 0.0, 1e-12);
  EXPECT_NEAR(distance(p.right.point, {1, 1}), 0.0, 1e-12);
  EXPECT_NEAR(p.left.length, std::sqrt(1.25), 1e-12);
  EXPECT_NEAR(p.right.length, std::sqrt(1.25), 1e-12);
  EXPECT_NEAR(p.alpha, p.beta, 1e-12);
}

TEST(TangentProbe, EllipseMatchesPolarLine) {
  const TangentProbe p = tangent_probe(SupportOval::ellipse(2, 1), {3, 0.5});
  const auto [left, right] = fixtures::ellipse_tangents(2, 1, {3, 0.5});
  EXPECT_NEAR(distance(p.left.point, left), 0.0, 1e-9);
  EXPECT_NEAR(distance(p.right.point, right), 0.0, 1e-9);
  EXPECT_GT(std::abs(p.defect()), 1e-3);
}

TEST(TangentProbe, EllipseMatchesDenseSampling) {
  const ConvexBody e = SupportOval::ellipse(2, 1);
  const auto [left, right] = fixtures::sampled_tangents(e, {3, 0.5}, 1000000);
  const TangentProbe p = tangent_probe(e, {3, 0.5});
  // Sample spacing is about 1e-5 of arc; the extreme sample sits within it.
  EXPECT_LT(distance(p.left.point, left), 1e-4);
  EXPECT_LT(distance(p.right.point, right), 1e-4);
}

TEST(TangentProbe, OvalsAgreeWithDenseSampling) {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const ConvexBody body = fixtures::random_oval(rng);
    const Point apex = fixtures::random_exterior(body, rng);
    const auto [left, right] = fixtures::sampled_tangents(body, apex, 200000);
    const TangentProbe p = tangent_probe(body, apex);
    EXPECT_LT(distance(p.left.point, left), 1e-3 * length_scale(body));
    EXPECT_LT(distance(p.right.point, right), 1e-3 * length_scale(body));
  }
}

TEST(TangentProbe, AnglesAreTriangleAngles) {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const ConvexBody body = i % 3 == 0 ? ConvexBody{fixtures::random_polygon(rng, rng.integer(3, 9))}
                                       : ConvexBody{fixtures::random_oval(rng)};
    const Point apex = fixtures::random_exterior(body, rng);
    TangentProbe p;
    try {
      p = tangent_probe(body, apex);
    } catch (const GeometryError& e) {
      ASSERT_EQ(e.kind(), ErrorKind::side_extension);
      continue;
    }
    EXPECT_NEAR(p.alpha, fixtures::interior_angle(p.right.point, apex, p.left.point), 1e-9);
    EXPECT_NEAR(p.beta, fixtures::interior_angle(p.left.point, apex, p.right.point), 1e-9);
    EXPECT_NEAR(p.left.length, distance(apex, p.left.point), 1e-12 * (1 + p.left.length));
    EXPECT_GT(cross(p.right.point - apex, p.left.point - apex), -1e-12)
        << "left tangency must be counterclockwise of the right one";
  }
}

TEST(TangentProbe, LawOfSines) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const ConvexBody body = fixtures::random_oval(rng);
    const Point apex = fixtures::random_exterior(body, rng);
    const TangentProbe p = tangent_probe(body, apex);
    const double r1 = p.left.length / std::sin(p.alpha);
    const double r2 = p.right.length / std::sin(p.beta);
    const double r3 = distance(p.left.point, p.right.point) / std::sin(p.visual_angle());
    EXPECT_NEAR(r1 / r2, 1.0, 1e-6);
    EXPECT_NEAR(r1 / r3, 1.0, 1e-6);
  }
}

TEST(TangentProbe, ChiralityUnderRotation) {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const SupportOval oval = fixtures::random_oval(rng);
    const Point apex = fixtures::random_exterior(oval, rng);
    const double turn = rng.uniform(0, kTwoPi);
    const TangentProbe p = tangent_probe(oval, apex);
    const TangentProbe q = tangent_probe(oval.rotated(turn), rotate(apex, turn));
    EXPECT_NEAR(q.left.length, p.left.length, 1e-9 * oval.diameter());
    EXPECT_NEAR(q.right.length, p.right.length, 1e-9 * oval.diameter());
    EXPECT_NEAR(distance(q.left.point, rotate(p.left.point, turn)), 0.0, 1e-8 * oval.diameter());
  }
}

TEST(TangentProbe, InteriorAndBoundaryApexesThrow) {
  EXPECT_EQ(kind_of([] { tangent_probe(SupportOval::ellipse(2, 1), {0.5, 0.2}); }), ErrorKind::inside_body);
  EXPECT_EQ(kind_of([] { tangent_probe(SupportOval::ellipse(2, 1), {2, 0}); }), ErrorKind::inside_body);
  EXPECT_EQ(kind_of([] { tangent_probe(unit_square(), {0.5, 0.5}); }), ErrorKind::inside_body);
  EXPECT_EQ(kind_of([] { tangent_probe(unit_square(), {2, 0}); }), ErrorKind::side_extension);
}

TEST(TangentProbe, PiecewiseCircularCircle) {
  // A circle split into three arcs behaves like the circle.
  std::vector<CircleArc> arcs;
  for (int k = 0; k < 3; ++k) {
    arcs.push_back({{0, 0}, 1.0, kTwoPi * k / 3, kTwoPi * (k + 1) / 3, Orientation::ccw});
  }
  const ConvexBody pcc = PiecewiseCircularCurve(arcs);
  ASSERT_TRUE(validate(pcc));
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const Point apex = unit_vector(rng.uniform(0, kTwoPi)) * rng.uniform(1.01, 10.0);
    const TangentProbe p = tangent_probe(pcc, apex);
    const double expected = std::sqrt(norm2(apex) - 1.0);
    EXPECT_NEAR(p.left.length, expected, 1e-9 * norm(apex));
    EXPECT_NEAR(p.right.length, expected, 1e-9 * norm(apex));
  }
}

TEST(SideExtension, SquareBottomSide) {
  const SideExtensionProbe s = side_extension_probe(unit_square(), {2, 0});
  EXPECT_NEAR(s.collinear.min, 1.0, 1e-12);
  EXPECT_NEAR(s.collinear.max, 2.0, 1e-12);
  EXPECT_NEAR(distance(s.near_end, {1, 0}), 0.0, 1e-12);
  EXPECT_NEAR(distance(s.far_end, {0, 0}), 0.0, 1e-12);
  EXPECT_NEAR(s.opposite_length, std::sqrt(2.0), 1e-12);
}

TEST(SideExtension, NotCollinearThrows) {
  EXPECT_EQ(kind_of([] { side_extension_probe(unit_square(), {2, 0.5}); }), ErrorKind::not_on_side_extension);
}

TEST(SideExtension, ObtuseTriangle) {
  const ConvexPolygon tri({{0, 0}, {4, 0}, {0.5, 1}});
  // Beyond C on the line BC.
  const Point b{4, 0}, c{0.5, 1};
  const Point apex = c + (c - b) * 0.5;
  const SideExtensionProbe s = side_extension_probe(tri, apex);
  EXPECT_NEAR(s.collinear.min, distance(apex, c), 1e-12);
  EXPECT_NEAR(s.collinear.max, distance(apex, b), 1e-12);
  EXPECT_NEAR(distance(s.opposite_point, {0, 0}), 0.0, 1e-12);
}

TEST(BoundaryPoint, UnitCircle) {
  const ConvexBody c = SupportOval::circle(1.0);
  const BoundarySample a = boundary_point(c, 0.0);
  EXPECT_NEAR(distance(a.point, {1, 0}), 0.0, 1e-15);
  EXPECT_NEAR(distance(a.tangent, {0, 1}), 0.0, 1e-15);
  const BoundarySample b = boundary_point(c, kPi / 2);
  EXPECT_NEAR(distance(b.point, {0, 1}), 0.0, 1e-15);
  EXPECT_NEAR(distance(b.tangent, {-1, 0}), 0.0, 1e-15);
}

TEST(BoundaryPoint, EllipseVertexAndDomain) {
  const ConvexBody e = SupportOval::ellipse(2, 1);
  EXPECT_NEAR(distance(boundary_point(e, 0.0).point, {2, 0}), 0.0, 1e-15);
  EXPECT_EQ(kind_of([&] { boundary_point(e, kTwoPi); }), ErrorKind::out_of_domain);
  EXPECT_EQ(kind_of([&] { boundary_point(e, -0.1); }), ErrorKind::out_of_domain);
}

TEST(BoundaryPoint, PolygonArcLength) {
  const ConvexBody sq = unit_square();
  EXPECT_DOUBLE_EQ(parameter_period(sq), 4.0);
  EXPECT_NEAR(distance(boundary_point(sq, 1.5).point, {1, 0.5}), 0.0, 1e-15);
  EXPECT_NEAR(distance(boundary_point(sq, 1.5).tangent, {0, 1}), 0.0, 1e-15);
}

TEST(Curvature, Circle) {
  for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(curvature(SupportOval::circle(1.0), t), 1.0, 1e-12);
}

TEST(Curvature, TrefoilRadius) {
  const SupportOval f = SupportOval::fourier(1.0, {{0, 0}, {0, 0}, {0.1, 0}});
  for (double t = 0; t < kTwoPi; t += 0.1) {
    EXPECT_NEAR(1.0 / curvature(f, t), 1.0 - 0.8 * std::cos(3 * t), 1e-12);
  }
}

TEST(Curvature, EllipseMatchesParametricFormula) {
  const SupportOval e = SupportOval::ellipse(2, 1);
  EXPECT_NEAR(curvature(e, 0.0), 2.0, 1e-12);        // a / b^2 at the major vertex
  EXPECT_NEAR(curvature(e, kPi / 2), 0.25, 1e-12);    // b / a^2
  for (double t = 0; t < kTwoPi; t += 0.05) {
    EXPECT_NEAR(1.0 / curvature(e, t), fixtures::ellipse_radius_of_curvature(2, 1, t), 1e-12);
  }
}

TEST(ExteriorDistance, SignAndValue) {
  EXPECT_NEAR(exterior_distance(unit_square(), {3, 0.5}), 2.0, 1e-12);
  EXPECT_LT(exterior_distance(unit_square(), {0.5, 0.5}), 0.0);
  EXPECT_NEAR(exterior_distance(SupportOval::circle(1.0), {0, 3}), 2.0, 1e-9);
}
