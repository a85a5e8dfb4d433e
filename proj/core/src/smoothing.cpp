#include <algorithm>
#include <cmath>

#include "equitangent/dodecagon.hpp"

namespace equitangent {

namespace {

// Outward normal angle of polygon side k.
double side_normal(const ConvexPolygon& poly, std::ptrdiff_t k) {
  const Vec2 e = poly.edge(k);
  return polar_angle(Vec2{e.y, -e.x});
}

void infeasible(const char* why) {
  throw GeometryError(ErrorKind::invalid_parameters, std::string("infeasible radii: ") + why);
}

}  // namespace

PiecewiseCircularCurve smooth(const ConvexPolygon& poly, double r_small, double R_large) {
  const Diagnostics diag = validate(ConvexBody{poly});
  if (!diag) throw GeometryError(ErrorKind::invalid_body, diag.message);
  if (!(r_small > 0.0) || !(R_large > r_small)) infeasible("need 0 < r_small < R_large");

  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  std::vector<Point> big_centers(poly.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Vec2 e = poly.edge(k);
    const double len = norm(e);
    if (!(2.0 * R_large > len)) infeasible("R_large is shorter than half a side");
    const Point mid = poly.vertex(k) + e * 0.5;
    big_centers[k] = mid + perp(e / len) * R_large;
  }

  // Small circle at vertex k: internally tangent to large circles k-1 and k.
  const double rho = R_large - r_small;
  std::vector<Point> small_centers(poly.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Point p = big_centers[(k - 1 + n) % n];
    const Point q = big_centers[k];
    const Vec2 pq = q - p;
    const double half = 0.5 * norm(pq);
    const double h2 = (rho - half) * (rho + half);
    if (!(half > 0.0) || !(h2 > 0.0)) infeasible("large circles do not overlap");
    const Point m = p + pq * 0.5;
    const Vec2 w = perp(pq / (2.0 * half)) * std::sqrt(h2);
    const Point c1 = m + w, c2 = m - w;
    const Point v = poly.vertex(k);
    small_centers[k] = distance(c1, v) < distance(c2, v) ? c1 : c2;
    // The small disc has to fit inside the corner.
    if (distance(small_centers[k], v) > 0.5 * std::min(norm(poly.edge(k)), norm(poly.edge(k - 1)))) {
      infeasible("r_small too large for the corner");
    }
  }

  std::vector<CircleArc> arcs;
  arcs.reserve(2 * poly.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Point c = small_centers[k];
    const Point prev_big = big_centers[(k - 1 + n) % n];
    const Point big = big_centers[k];
    const Point next_small = small_centers[(k + 1) % n];

    const double small_start = polar_angle(c - prev_big);
    const double small_sweep = wrap_angle(polar_angle(c - big) - small_start);
    const double big_start = polar_angle(c - big);
    const double big_sweep = wrap_angle(polar_angle(next_small - big) - big_start);
    if (!(small_sweep > 0.0 && small_sweep < kPi)) infeasible("vertex arc does not turn left");
    if (!(big_sweep > 0.0 && big_sweep < kPi)) infeasible("side arc does not turn left");

    arcs.push_back({c, r_small, small_start, small_start + small_sweep, Orientation::ccw});
    arcs.push_back({big, R_large, big_start, big_start + big_sweep, Orientation::ccw});
  }
  PiecewiseCircularCurve curve(std::move(arcs));
  const Diagnostics check = validate(ConvexBody{curve});
  if (!check) infeasible(check.message.c_str());
  return curve;
}

double smoothed_parameter(const ConvexPolygon& poly, const PiecewiseCircularCurve& smoothed,
                          Point point, const DirectedLine& support) {
  if (smoothed.size() != 2 * poly.size()) {
    throw GeometryError(ErrorKind::invalid_parameters, "curve was not produced by smooth()");
  }
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  const double period = static_cast<double>(smoothed.size());
  const double tol = Tolerance{poly.diameter()}.length();

  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Point v = poly.vertex(k);
    if (distance(point, v) > tol) continue;
    // Outward normal of the support line, then its place within the normal cone.
    Vec2 normal{support.direction().y, -support.direction().x};
    if (dot(normal, v - poly.centroid()) < 0.0) normal = -normal;
    const double lo = side_normal(poly, k - 1);
    const double width = wrap_angle(side_normal(poly, k) - lo);
    double offset = wrap_angle(polar_angle(normal) - lo);
    if (offset > width) offset = offset - width < kTwoPi - offset ? width : 0.0;
    const double f = width > 0.0 ? offset / width : 0.0;
    return std::fmod(2.0 * static_cast<double>(k) + f, period);
  }
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const Point a = poly.vertex(k);
    const Vec2 e = poly.edge(k);
    const double len = norm(e);
    const double along = dot(point - a, e) / len;
    const double off = std::abs(cross(e, point - a)) / len;
    if (off <= tol && along > 0.0 && along < len) {
      return std::fmod(2.0 * static_cast<double>(k) + 1.0 + along / len, period);
    }
  }
  throw GeometryError(ErrorKind::out_of_domain, "point is not on the polygon boundary");
}

SmoothedChord smooth_chord(const ConvexPolygon& poly, const PiecewiseCircularCurve& smoothed,
                           const ChordState& state) {
  const ConvexBody body{smoothed};
  SmoothedChord out;
  out.first = boundary_point(body, smoothed_parameter(poly, smoothed, state.first, state.support_first));
  out.second =
      boundary_point(body, smoothed_parameter(poly, smoothed, state.second, state.support_second));
  out.apex = intersect_lines(DirectedLine(out.first.point, out.first.tangent),
                             DirectedLine(out.second.point, out.second.tangent));
  return out;
}

std::vector<Point> smoothed_star(const ConvexPolygon& poly, const PiecewiseCircularCurve& smoothed,
                                 const std::vector<ChordState>& states) {
  std::vector<Point> pts;
  pts.reserve(states.size());
  for (const auto& s : states) {
    const SmoothedChord c = smooth_chord(poly, smoothed, s);
    if (c.apex) pts.push_back(*c.apex);
  }
  return pts;
}

}  // namespace equitangent
