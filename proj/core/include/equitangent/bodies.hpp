#pragma once

// Convex body representations and the two-tangent query.
//
// Three representations share one query surface:
//   ConvexPolygon           - vertices in counterclockwise order
//   PiecewiseCircularCurve  - closed C1 chain of left-turning circular arcs
//   SupportOval             - smooth oval given by its support function h(theta)
//
// Conventions for a tangent probe from an exterior apex A: looking from A at the
// body, the left tangency is the one counterclockwise of the right one as seen
// from A. `beta` is the chord-tangent angle at the left tangency and `alpha` the
// one at the right tangency, both interior to triangle (A, left, right). With
// this pairing beta < alpha holds exactly when the right segment is shorter.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equitangent/geom.hpp"

namespace equitangent {

class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Cyclic indexing.
  Point vertex(std::ptrdiff_t i) const;
  Vec2 edge(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }
  double perimeter() const;
  // Arc-length position of vertex i along the boundary, starting from vertex 0.
  double vertex_parameter(std::size_t i) const;
  Point centroid() const;
  // Largest vertex-to-vertex distance.
  double diameter() const { return diameter_; }

 private:
  std::vector<Point> vertices_;
  double diameter_ = 0.0;
};

class PiecewiseCircularCurve {
 public:
  PiecewiseCircularCurve() = default;
  explicit PiecewiseCircularCurve(std::vector<CircleArc> arcs);

  const std::vector<CircleArc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  const CircleArc& arc(std::ptrdiff_t i) const;
  // Approximate diameter from dense samples of every arc.
  double diameter() const { return diameter_; }

 private:
  std::vector<CircleArc> arcs_;
  double diameter_ = 0.0;
};

struct SupportValue {
  double h = 0.0;
  double dh = 0.0;
  double d2h = 0.0;
};

// h(theta) = base(theta - rotation) + center . (cos theta, sin theta).
class SupportOval {
 public:
  enum class Kind { ellipse, fourier };

  // Semi-axis a along x and b along y before rotation.
  static SupportOval ellipse(double a, double b);
  static SupportOval circle(double r);
  // h(theta) = c0 + sum_k (a_k cos k theta + b_k sin k theta); harmonics[k-1] = {a_k, b_k}.
  static SupportOval fourier(double c0, std::vector<std::pair<double, double>> harmonics);

  SupportOval rotated(double angle) const;
  SupportOval translated(Vec2 offset) const;

  Kind kind() const { return kind_; }
  // Ellipse: {a, b}. Fourier: {c0, a1, b1, a2, b2, ...}.
  const std::vector<double>& params() const { return params_; }
  double rotation() const { return rotation_; }
  Vec2 center() const { return center_; }

  SupportValue eval(double theta) const;
  // Boundary point with outward normal direction theta.
  Point point(double theta) const;
  // Unit counterclockwise tangent at the boundary point with normal theta.
  Vec2 tangent(double theta) const { return perp(unit_vector(theta)); }
  double radius_of_curvature(double theta) const {
    const auto v = eval(theta);
    return v.h + v.d2h;
  }
  // Maximal width.
  double diameter() const { return diameter_; }

 private:
  SupportValue eval_base(double phi) const;
  void update_diameter();

  Kind kind_ = Kind::ellipse;
  std::vector<double> params_{1.0, 1.0};
  double rotation_ = 0.0;
  Vec2 center_{};
  double diameter_ = 2.0;
};

using ConvexBody = std::variant<ConvexPolygon, PiecewiseCircularCurve, SupportOval>;

struct Diagnostics {
  bool ok = true;
  // Short name of the first violated invariant, e.g. "orientation".
  std::string invariant;
  std::string message;

  explicit operator bool() const { return ok; }
  static Diagnostics pass() { return {}; }
  static Diagnostics fail(std::string invariant, std::string message) {
    return {false, std::move(invariant), std::move(message)};
  }
};

Diagnostics validate(const ConvexBody& body);

// Throws GeometryError(invalid_body) carrying the diagnostic.
void require_valid(const ConvexBody& body);

// Diameter of the body; the default length scale for tolerances.
double length_scale(const ConvexBody& body);

// max over directions of (A . u - h(u)): the Euclidean distance to the body for
// exterior points, minus the depth for interior points.
double exterior_distance(const ConvexBody& body, Point apex);

struct Tangency {
  Point point{};
  // Through the tangency point, directed toward the apex.
  DirectedLine line{};
  double length = 0.0;
  // Boundary parameter of the tangency (see boundary_point).
  double param = 0.0;
};

struct TangentProbe {
  Point apex{};
  Tangency left;
  Tangency right;
  double alpha = 0.0;  // at the right tangency
  double beta = 0.0;   // at the left tangency

  double defect() const { return left.length - right.length; }
  double angle_gap() const { return alpha - beta; }
  // Angle subtended by the body at the apex.
  double visual_angle() const { return kPi - alpha - beta; }
};

// Throws GeometryError(inside_body) when the apex is not strictly exterior and
// GeometryError(side_extension) when it lies on the line of a polygon side.
TangentProbe tangent_probe(const ConvexBody& body, Point apex);

struct LengthInterval {
  double min = 0.0;
  double max = 0.0;
  bool contains(double v) const { return v >= min && v <= max; }
};

// Probe for an apex collinear with a polygon side: every segment from the apex
// to that side counts as a tangent segment.
struct SideExtensionProbe {
  std::size_t side = 0;  // side from vertex(side) to vertex(side + 1)
  Point near_end{};
  Point far_end{};
  LengthInterval collinear;
  Point opposite_point{};
  double opposite_length = 0.0;
  bool collinear_is_left = false;
};

// Throws GeometryError(not_on_side_extension) when the apex is not collinear
// with any side, and GeometryError(inside_body) for non-exterior apexes.
SideExtensionProbe side_extension_probe(const ConvexPolygon& poly, Point apex);

struct BoundarySample {
  Point point{};
  Vec2 tangent{};  // unit, counterclockwise
};

// Parameter domains:
//   polygon: arc length from vertex 0, period = perimeter
//   piecewise circular: arc index + fraction of that arc's sweep, period = arc count
//   support oval: outward normal angle, period = 2 pi
// Throws GeometryError(out_of_domain) for t outside [0, period).
BoundarySample boundary_point(const ConvexBody& body, double t);
double parameter_period(const ConvexBody& body);

// Support value and a support point in direction theta. Defined for every body.
struct SupportSample {
  double h = 0.0;
  Point point{};
};
SupportSample support(const ConvexBody& body, double theta);

// 1 / (h + h''). Throws GeometryError(invalid_body) where h + h'' <= 0.
double curvature(const SupportOval& oval, double theta);

}  // namespace equitangent
