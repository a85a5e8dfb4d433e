#pragma once

// Plane primitives shared by the rest of the library: points, directed lines,
// circular arcs, angle conventions and the error type.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace equitangent {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

using Point = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr double norm2(Vec2 v) { return dot(v, v); }
inline double distance(Point a, Point b) { return norm(a - b); }

// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double polar_angle(Vec2 v) { return std::atan2(v.y, v.x); }
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}
inline Point rotate_about(Point p, Point center, double angle) {
  return center + rotate(p - center, angle);
}

// Unsigned angle between two nonzero vectors, in [0, pi].
inline double vector_angle(Vec2 a, Vec2 b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

// Maps an angle into [0, 2pi).
double wrap_angle(double angle);
// Maps an angle into (-pi, pi].
double wrap_signed(double angle);

enum class ErrorKind {
  degenerate,
  inside_body,
  side_extension,
  not_on_side_extension,
  out_of_domain,
  invalid_body,
  invalid_parameters,
  parallel,
  not_converged,
  broken_loop,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Absolute tolerance derived from a length scale. The default scale is 1; bodies
// supply their diameter.
struct Tolerance {
  double scale = 1.0;
  double epsilon = 1e-9;
  double length() const { return scale * epsilon; }
};

class DirectedLine {
 public:
  DirectedLine() = default;
  // Normalizes `direction`; throws GeometryError(degenerate) for a zero vector.
  DirectedLine(Point origin, Vec2 direction);

  static DirectedLine through(Point from, Point to) { return {from, to - from}; }

  Point origin() const { return origin_; }
  Vec2 direction() const { return direction_; }
  Point at(double t) const { return origin_ + direction_ * t; }
  DirectedLine reversed() const { return {origin_, -direction_}; }

  // Positive when p lies to the left of the line.
  double signed_distance(Point p) const { return cross(direction_, p - origin_); }

 private:
  Point origin_{};
  Vec2 direction_{1.0, 0.0};
};

enum class Orientation { ccw, cw };

struct CircleArc {
  Point center{};
  double radius = 1.0;
  // Polar angles of the endpoints about `center`.
  double start_angle = 0.0;
  double end_angle = kTwoPi;
  Orientation orientation = Orientation::ccw;

  double sweep() const {
    return orientation == Orientation::ccw ? end_angle - start_angle
                                           : start_angle - end_angle;
  }
  double length() const { return radius * std::abs(sweep()); }
  Point point_at_angle(double angle) const { return center + unit_vector(angle) * radius; }
  Point start_point() const { return point_at_angle(start_angle); }
  Point end_point() const { return point_at_angle(end_angle); }
  // Polar angle at fraction f in [0, 1] of the sweep.
  double angle_at(double f) const { return start_angle + f * (end_angle - start_angle); }
  // Unit tangent in the direction of travel.
  Vec2 tangent_at_angle(double angle) const {
    const Vec2 t = perp(unit_vector(angle));
    return orientation == Orientation::ccw ? t : -t;
  }
  // Fraction of the sweep at which polar angle `angle` occurs, or nullopt if
  // it lies outside the arc by more than `slack` radians.
  std::optional<double> fraction_of(double angle, double slack = 0.0) const;
};

// Unique intersection, or nullopt for (near) parallel lines.
std::optional<Point> intersect_lines(const DirectedLine& a, const DirectedLine& b);

// Angle between the chord ray (chord.origin along chord.direction) and the
// tangent line, measured on the side of the chord that contains `witness`.
// The tangent line is used only for its direction. Measuring on the opposite
// side yields pi minus this value. Throws GeometryError(degenerate) when the
// lines are parallel or the witness lies on the chord line.
double angle_between(const DirectedLine& chord, const DirectedLine& tangent, Point witness);

// The two points of contact of the tangents from `apex` to circle (center, r).
// The first returned point is the left one looking from the apex toward the center.
std::pair<Point, Point> tangent_points_to_circle(Point apex, Point center, double r);

}  // namespace equitangent
