#pragma once

// Loci around a convex body: the equitangent locus (exterior points with equal
// tangent segments), isoptic curves, curvature vertices, double normals and
// the symmetry set.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equitangent/bodies.hpp"
#include "equitangent/geom.hpp"

namespace equitangent {

struct Box {
  Point lo{};
  Point hi{};

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  bool contains(Point p) const { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }
  // Distance from an interior point to the nearest side of the box.
  double frame_distance(Point p) const;
};

// Square of side 6 * diameter centered on the middle of the body's bounding box.
Box default_box(const ConvexBody& body);

struct ScalarField {
  std::function<double(Point)> eval;  // NaN where masked
  Box domain;
  std::function<bool(Point)> exterior;
  std::function<double(Point)> boundary_distance;
  double scale = 1.0;
};

enum class LocusKind { boundary_to_boundary, boundary_to_infinity, infinity_to_infinity, closed };

const char* to_string(LocusKind kind);

struct LocusComponent {
  std::vector<Point> points;
  LocusKind kind = LocusKind::closed;
};

// L_left - L_right at exterior points, NaN on the body. Apexes on the line of a
// polygon side use the overlap convention: zero when the opposite length lies
// within the interval of collinear lengths, otherwise the signed gap to the
// nearer end of that interval.
ScalarField equitangent_field(const ConvexBody& body, std::optional<Box> box = std::nullopt);

// Value of the equitangent field at one exterior point (same conventions).
double equitangent_value(const ConvexBody& body, Point apex);

// Marching squares on resolution x resolution cell-centered nodes. Closed loops
// spanning less than two cells are below grid resolution and dropped.
// Components are ordered by their leftmost point. Throws GeometryError(invalid_parameters)
// for resolution < 64 and GeometryError(degenerate) when the field vanishes on
// the whole grid.
std::vector<LocusComponent> trace_locus(const ScalarField& field, int resolution);

// Exact locus of a triangle assembled from the side lines and the perpendicular
// bisectors, keeping the pieces whose midpoints satisfy the equal-tangent test.
// Unbounded pieces are clipped to `box` (default_box when absent).
std::vector<LocusComponent> triangle_locus_exact(const ConvexPolygon& triangle,
                                                 std::optional<Box> box = std::nullopt);

// Largest distance from any point of `points` to the nearest component polyline.
double max_distance_to(const std::vector<LocusComponent>& reference, const std::vector<Point>& points);

// Closed curve of apexes from which the body is seen under `view_angle`,
// parametrized by the outward normal of one support line; `resolution` samples.
// Throws GeometryError(invalid_body) for polygons and
// GeometryError(out_of_domain) unless 0 < view_angle < pi.
std::vector<Point> isoptic(const ConvexBody& body, double view_angle, int resolution);

// Apexes on the isoptic with equal tangent segments, from sign changes of the
// length difference refined by bisection. Throws GeometryError(degenerate) when
// the difference vanishes along the whole curve.
std::vector<Point> equal_tangent_points_on_isoptic(const ConvexBody& body, double view_angle,
                                                   int resolution = 4096);

struct CurvatureVertex {
  double theta = 0.0;
  double curvature = 0.0;
  bool maximum = false;
};

// Local extrema of curvature, refined by golden-section search. Throws
// GeometryError(degenerate) for circles.
std::vector<CurvatureVertex> vertices(const SupportOval& oval, int n_samples = 4096);

struct DoubleNormal {
  double theta = 0.0;  // outward normal at `first`; `second` has normal theta + pi
  Point first{};
  Point second{};
  double length = 0.0;
};

// Chords normal to the curve at both ends: zeros of the derivative of the width
// function on [0, pi). Throws GeometryError(degenerate) for constant width.
std::vector<DoubleNormal> diameters(const SupportOval& oval, int n_samples = 4096);

struct SymmetrySetBranch {
  std::size_t loop_id = 0;
  std::vector<std::vector<Point>> pieces;
  // Boundary parameter pairs with parallel normals (center at infinity).
  std::vector<std::pair<double, double>> unbounded;
};

// Centers of bitangent circles along each non-diagonal loop of the torus curve.
// A circle gives a single branch holding its center.
std::vector<SymmetrySetBranch> symmetry_set(const ConvexBody& body, int resolution);

}  // namespace equitangent
