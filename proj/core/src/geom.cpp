#include "equitangent/geom.hpp"

#include <algorithm>

namespace equitangent {

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

double wrap_signed(double angle) {
  double a = wrap_angle(angle);
  if (a > kPi) a -= kTwoPi;
  return a;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::inside_body: return "inside_body";
    case ErrorKind::side_extension: return "side_extension";
    case ErrorKind::not_on_side_extension: return "not_on_side_extension";
    case ErrorKind::out_of_domain: return "out_of_domain";
    case ErrorKind::invalid_body: return "invalid_body";
    case ErrorKind::invalid_parameters: return "invalid_parameters";
    case ErrorKind::parallel: return "parallel";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::broken_loop: return "broken_loop";
  }
  return "unknown";
}

DirectedLine::DirectedLine(Point origin, Vec2 direction) : origin_(origin) {
  const double n = norm(direction);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError(ErrorKind::degenerate, "directed line needs a nonzero direction");
  }
  direction_ = direction / n;
}

std::optional<double> CircleArc::fraction_of(double angle, double slack) const {
  const double sw = sweep();
  if (!(std::abs(sw) > 0.0)) return std::nullopt;
  // Offset from the start, measured along the direction of travel.
  double offset = orientation == Orientation::ccw ? wrap_angle(angle - start_angle)
                                                  : wrap_angle(start_angle - angle);
  const double len = std::abs(sw);
  if (offset > len + slack) {
    // Slightly before the start wraps to just under 2pi.
    if (kTwoPi - offset <= slack) offset -= kTwoPi;
    else return std::nullopt;
  }
  return std::clamp(offset / len, 0.0, 1.0);
}

std::optional<Point> intersect_lines(const DirectedLine& a, const DirectedLine& b) {
  const double denom = cross(a.direction(), b.direction());
  if (std::abs(denom) < 1e-12) return std::nullopt;
  const double t = cross(b.origin() - a.origin(), b.direction()) / denom;
  return a.at(t);
}

double angle_between(const DirectedLine& chord, const DirectedLine& tangent, Point witness) {
  const Vec2 c = chord.direction();
  Vec2 d = tangent.direction();
  const double side = cross(c, witness - chord.origin());
  const double turn = cross(c, d);
  if (std::abs(turn) < 1e-12) {
    throw GeometryError(ErrorKind::degenerate, "chord and tangent are parallel");
  }
  if (side == 0.0) {
    throw GeometryError(ErrorKind::degenerate, "witness lies on the chord line");
  }
  if ((turn > 0.0) != (side > 0.0)) d = -d;
  return vector_angle(c, d);
}

std::pair<Point, Point> tangent_points_to_circle(Point apex, Point center, double r) {
  if (!(r > 0.0)) throw GeometryError(ErrorKind::degenerate, "circle radius must be positive");
  const Vec2 v = apex - center;
  const double d = norm(v);
  if (d <= r * (1.0 + 1e-12)) {
    throw GeometryError(ErrorKind::inside_body, "apex is inside or on the circle");
  }
  // Half-angle at the center between the apex direction and each contact point.
  const double tangent_len = std::sqrt((d - r) * (d + r));
  const double half = std::atan2(tangent_len, r);
  const double base = polar_angle(v);
  // Looking from the apex toward the center, the left contact lies
  // clockwise of the apex direction as seen from the center.
  const Point left = center + unit_vector(base - half) * r;
  const Point right = center + unit_vector(base + half) * r;
  return {left, right};
}

}  // namespace equitangent
