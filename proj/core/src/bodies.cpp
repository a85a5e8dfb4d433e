#include "equitangent/bodies.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <sstream>

namespace equitangent {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t wrap_index(std::ptrdiff_t i, std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// ---------------------------------------------------------------------------
// Polygon helpers

double polygon_diameter(const ConvexPolygon& poly) { return poly.diameter(); }

double segment_distance(Point p, Point a, Point b) {
  const Vec2 ab = b - a;
  const double len2 = norm2(ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + ab * t);
}

double polygon_exterior_distance(const ConvexPolygon& poly, Point p) {
  bool inside = true;
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point b = poly.vertex(static_cast<std::ptrdiff_t>(i) + 1);
    if (cross(b - a, p - a) < 0.0) inside = false;
    dmin = std::min(dmin, segment_distance(p, a, b));
  }
  return inside ? -dmin : dmin;
}

// Signed distance of p from the line of edge i, positive outside.
double edge_outside_distance(const ConvexPolygon& poly, std::size_t i, Point p) {
  const Point a = poly.vertex(static_cast<std::ptrdiff_t>(i));
  const Vec2 e = poly.edge(static_cast<std::ptrdiff_t>(i));
  return -cross(e, p - a) / norm(e);
}

void assign_chirality(Point apex, Tangency& a, Tangency& b) {
  // `a` is left when it lies counterclockwise of `b` as seen from the apex.
  if (cross(b.point - apex, a.point - apex) < 0.0) std::swap(a, b);
}

Tangency make_tangency(Point apex, Point at, double param) {
  Tangency t;
  t.point = at;
  t.line = DirectedLine(at, apex - at);
  t.length = distance(apex, at);
  t.param = param;
  return t;
}

TangentProbe finish_probe(Point apex, Tangency left, Tangency right) {
  TangentProbe probe;
  probe.apex = apex;
  probe.left = left;
  probe.right = right;
  const DirectedLine chord_from_left = DirectedLine::through(left.point, right.point);
  const DirectedLine chord_from_right = DirectedLine::through(right.point, left.point);
  probe.beta = angle_between(chord_from_left, left.line, apex);
  probe.alpha = angle_between(chord_from_right, right.line, apex);
  return probe;
}

TangentProbe polygon_probe(const ConvexPolygon& poly, Point apex) {
  const std::size_t n = poly.size();
  const double tol = Tolerance{polygon_diameter(poly)}.length();
  std::vector<int> visible(n);
  bool any_visible = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = edge_outside_distance(poly, i, apex);
    if (std::abs(d) <= tol) {
      // On the line of side i. Outside the segment it is a side extension,
      // otherwise the apex is on the boundary.
      const Point a = poly.vertex(static_cast<std::ptrdiff_t>(i));
      const Vec2 e = poly.edge(static_cast<std::ptrdiff_t>(i));
      const double t = dot(apex - a, e) / norm2(e);
      if (t > 0.0 && t < 1.0) {
        throw GeometryError(ErrorKind::inside_body, "apex lies on the polygon boundary");
      }
      if (polygon_exterior_distance(poly, apex) > tol) {
        throw GeometryError(ErrorKind::side_extension,
                            "apex lies on the extension of a polygon side");
      }
      throw GeometryError(ErrorKind::inside_body, "apex is not exterior to the polygon");
    }
    visible[i] = d > 0.0 ? 1 : 0;
    any_visible = any_visible || d > 0.0;
  }
  if (!any_visible) {
    throw GeometryError(ErrorKind::inside_body, "apex is not exterior to the polygon");
  }
  std::vector<std::size_t> touch;
  for (std::size_t i = 0; i < n; ++i) {
    if (visible[wrap_index(static_cast<std::ptrdiff_t>(i) - 1, n)] != visible[i]) touch.push_back(i);
  }
  if (touch.size() != 2) {
    throw GeometryError(ErrorKind::degenerate, "polygon probe did not find two tangencies");
  }
  Tangency a = make_tangency(apex, poly.vertices()[touch[0]], poly.vertex_parameter(touch[0]));
  Tangency b = make_tangency(apex, poly.vertices()[touch[1]], poly.vertex_parameter(touch[1]));
  assign_chirality(apex, a, b);
  return finish_probe(apex, a, b);
}

// ---------------------------------------------------------------------------
// Piecewise circular helpers

// max over the arc's normal range of (apex - c) . u - r.
double arc_support_excess(const CircleArc& arc, Point apex) {
  const Vec2 v = apex - arc.center;
  const double d = norm(v);
  if (d > 0.0 && arc.fraction_of(polar_angle(v)).has_value()) return d - arc.radius;
  return std::max(dot(v, unit_vector(arc.start_angle)), dot(v, unit_vector(arc.end_angle))) -
         arc.radius;
}

double pcc_exterior_distance(const PiecewiseCircularCurve& pcc, Point apex) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& arc : pcc.arcs()) best = std::max(best, arc_support_excess(arc, apex));
  return best;
}

double pcc_diameter(const PiecewiseCircularCurve& pcc) { return pcc.diameter(); }

TangentProbe pcc_probe(const PiecewiseCircularCurve& pcc, Point apex) {
  const double scale = pcc_diameter(pcc);
  const Tolerance tol{scale};
  if (pcc_exterior_distance(pcc, apex) <= tol.length()) {
    throw GeometryError(ErrorKind::inside_body, "apex is not exterior to the curve");
  }
  // Candidates from every arc. Near a junction the same tangent direction can
  // be accepted by a small arc (at its end, within the angle tolerance) and
  // found slightly further along a large neighbour, so keep the two angular
  // extremes as seen from the apex rather than deduplicating by distance.
  Point inner{};
  for (const auto& arc : pcc.arcs()) inner += arc.point_at_angle(arc.angle_at(0.5));
  inner = inner / static_cast<double>(pcc.size());
  const Vec2 gaze = inner - apex;
  std::optional<Tangency> left, right;
  double left_angle = 0.0, right_angle = 0.0;
  for (std::size_t k = 0; k < pcc.size(); ++k) {
    const CircleArc& arc = pcc.arcs()[k];
    const Vec2 v = apex - arc.center;
    const double d = norm(v);
    if (d <= arc.radius) continue;
    const double half = std::atan2(std::sqrt((d - arc.radius) * (d + arc.radius)), arc.radius);
    const double base = polar_angle(v);
    for (double angle : {base - half, base + half}) {
      const auto f = arc.fraction_of(angle, 1e-12 * scale / arc.radius);
      if (!f) continue;
      const Point at = arc.point_at_angle(angle);
      const double seen = std::atan2(cross(gaze, at - apex), dot(gaze, at - apex));
      if (seen > left_angle) {
        left_angle = seen;
        left = make_tangency(apex, at, static_cast<double>(k) + *f);
      } else if (seen < right_angle) {
        right_angle = seen;
        right = make_tangency(apex, at, static_cast<double>(k) + *f);
      }
    }
  }
  if (!left || !right) {
    throw GeometryError(ErrorKind::degenerate, "piecewise circular probe is missing a tangency");
  }
  return finish_probe(apex, *left, *right);
}

const CircleArc* pcc_arc_for_normal(const PiecewiseCircularCurve& pcc, double theta,
                                    double* fraction) {
  const CircleArc* best = nullptr;
  double best_gap = std::numeric_limits<double>::infinity();
  for (const auto& arc : pcc.arcs()) {
    if (auto f = arc.fraction_of(theta)) {
      *fraction = *f;
      return &arc;
    }
    const double gap = std::min(std::abs(wrap_signed(theta - arc.start_angle)),
                                std::abs(wrap_signed(theta - arc.end_angle)));
    if (gap < best_gap) {
      best_gap = gap;
      best = &arc;
      *fraction = std::abs(wrap_signed(theta - arc.start_angle)) <
                          std::abs(wrap_signed(theta - arc.end_angle))
                      ? 0.0
                      : 1.0;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Support oval helpers

double oval_diameter(const SupportOval& oval) { return oval.diameter(); }

// F(theta) = apex . u - h; positive exactly on the directions whose support
// line separates the apex from the oval.
double oval_excess(const SupportOval& oval, Point apex, double theta) {
  return dot(apex, unit_vector(theta)) - oval.eval(theta).h;
}

// Finds a direction with maximal excess near the best of a coarse sample. With
// `good_enough` set, stops as soon as the coarse sample beats it.
std::pair<double, double> oval_max_excess(const SupportOval& oval, Point apex, int samples,
                                          double good_enough = std::numeric_limits<double>::infinity()) {
  double best_theta = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  const Vec2 rel = apex - oval.center();
  if (norm(rel) > 0.0) {
    best_theta = polar_angle(rel);
    best = oval_excess(oval, apex, best_theta);
  }
  for (int i = 0; i < samples; ++i) {
    const double th = kTwoPi * i / samples;
    const double v = oval_excess(oval, apex, th);
    if (v > best) {
      best = v;
      best_theta = th;
    }
  }
  if (best > good_enough) return {best_theta, best};
  // Golden-section refinement over the neighbouring sample spacing.
  const double step = kTwoPi / samples;
  double lo = best_theta - step, hi = best_theta + step;
  constexpr double g = 0.6180339887498949;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = oval_excess(oval, apex, x1), f2 = oval_excess(oval, apex, x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = oval_excess(oval, apex, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = oval_excess(oval, apex, x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = oval_excess(oval, apex, mid);
  if (fm > best) return {mid, fm};
  return {best_theta, best};
}

// Root of the excess on [lo, hi] with excess(lo) > 0 > excess(hi): safeguarded Newton.
double oval_tangent_root(const SupportOval& oval, Point apex, double lo, double hi) {
  double f_lo = oval_excess(oval, apex, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const auto v = oval.eval(x);
    const Vec2 u = unit_vector(x);
    const double f = dot(apex, u) - v.h;
    if (f == 0.0) return x;
    if ((f > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    if (hi - lo < 1e-15) break;
    const double df = dot(apex, perp(u)) - v.dh;
    double next = df != 0.0 ? x - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

TangentProbe oval_probe(const SupportOval& oval, Point apex) {
  const double scale = oval_diameter(oval);
  const Tolerance tol{scale};
  // Any direction with positive excess brackets both tangency roots.
  auto [theta_star, excess] = oval_max_excess(oval, apex, 64, 1e3 * tol.length());
  if (excess <= tol.length()) {
    std::tie(theta_star, excess) = oval_max_excess(oval, apex, 1024);
    if (excess <= tol.length()) {
      throw GeometryError(ErrorKind::inside_body, "apex is not exterior to the oval");
    }
  }
  const double r1 = oval_tangent_root(oval, apex, theta_star, theta_star + kPi);
  const double r2 = oval_tangent_root(oval, apex, theta_star - kPi, theta_star);
  Tangency a = make_tangency(apex, oval.point(r1), wrap_angle(r1));
  Tangency b = make_tangency(apex, oval.point(r2), wrap_angle(r2));
  assign_chirality(apex, a, b);
  return finish_probe(apex, a, b);
}

Diagnostics validate_polygon(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return Diagnostics::fail("vertex count", "polygon needs at least 3 vertices");
  for (const Point& p : poly.vertices()) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      return Diagnostics::fail("finite", "vertex coordinates must be finite");
  }
  const double tol = Tolerance{polygon_diameter(poly)}.length();
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(poly.edge(static_cast<std::ptrdiff_t>(i))) <= tol)
      return Diagnostics::fail("repeated vertex", "consecutive vertices coincide");
  }
  int positive = 0, negative = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = poly.edge(static_cast<std::ptrdiff_t>(i) - 1);
    const Vec2 e1 = poly.edge(static_cast<std::ptrdiff_t>(i));
    const double s = cross(e0, e1) / (norm(e0) * norm(e1));
    if (s > 1e-12) ++positive;
    else if (s < -1e-12) ++negative;
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (negative == static_cast<int>(n))
    return Diagnostics::fail("orientation", "vertices are in clockwise order");
  if (positive != static_cast<int>(n))
    return Diagnostics::fail("convexity", "polygon is not strictly convex");
  if (std::abs(turning - kTwoPi) > 1e-9)
    return Diagnostics::fail("simple", "total turning differs from 2 pi");
  return Diagnostics::pass();
}

Diagnostics validate_pcc(const PiecewiseCircularCurve& pcc) {
  if (pcc.size() < 2) return Diagnostics::fail("arc count", "curve needs at least 2 arcs");
  for (const auto& arc : pcc.arcs()) {
    if (!(arc.radius > 0.0) || !std::isfinite(arc.radius))
      return Diagnostics::fail("radius", "arc radius must be positive and finite");
    if (arc.orientation != Orientation::ccw)
      return Diagnostics::fail("orientation", "every arc must turn left");
    const double sw = arc.sweep();
    if (!(sw > 0.0) || sw > kTwoPi)
      return Diagnostics::fail("sweep", "arc sweep must lie in (0, 2 pi]");
  }
  const double scale = pcc_diameter(pcc);
  double turning = 0.0;
  for (std::size_t i = 0; i < pcc.size(); ++i) {
    const CircleArc& a = pcc.arcs()[i];
    const CircleArc& b = pcc.arc(static_cast<std::ptrdiff_t>(i) + 1);
    turning += a.sweep();
    if (distance(a.end_point(), b.start_point()) > 1e-9 * scale) {
      std::ostringstream msg;
      msg << "arcs " << i << " and " << (i + 1) % pcc.size() << " do not share an endpoint";
      return Diagnostics::fail("C1 continuity", msg.str());
    }
    const Vec2 ta = a.tangent_at_angle(a.end_angle);
    const Vec2 tb = b.tangent_at_angle(b.start_angle);
    if (vector_angle(ta, tb) > 1e-9) {
      std::ostringstream msg;
      msg << "tangent direction jumps between arcs " << i << " and " << (i + 1) % pcc.size();
      return Diagnostics::fail("C1 continuity", msg.str());
    }
  }
  if (std::abs(turning - kTwoPi) > 1e-9)
    return Diagnostics::fail("total turning", "arc sweeps must add up to 2 pi");
  return Diagnostics::pass();
}

Diagnostics validate_oval(const SupportOval& oval) {
  constexpr int n = 4096;
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / n;
    const auto v = oval.eval(th);
    if (!std::isfinite(v.h) || !std::isfinite(v.dh) || !std::isfinite(v.d2h))
      return Diagnostics::fail("finite", "support function is not finite");
    if (!(v.h + v.d2h > 0.0)) {
      std::ostringstream msg;
      msg << "radius of curvature h+h'' = " << (v.h + v.d2h) << " at theta = " << th;
      return Diagnostics::fail("h+h″>0 violated", msg.str());
    }
  }
  return Diagnostics::pass();
}

}  // namespace

// ---------------------------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      diameter_ = std::max(diameter_, distance(vertices_[i], vertices_[j]));
}

Point ConvexPolygon::vertex(std::ptrdiff_t i) const {
  return vertices_[wrap_index(i, vertices_.size())];
}

double ConvexPolygon::perimeter() const {
  double p = 0.0;
  for (std::size_t i = 0; i < size(); ++i) p += norm(edge(static_cast<std::ptrdiff_t>(i)));
  return p;
}

double ConvexPolygon::vertex_parameter(std::size_t i) const {
  double p = 0.0;
  for (std::size_t k = 0; k < i; ++k) p += norm(edge(static_cast<std::ptrdiff_t>(k)));
  return p;
}

Point ConvexPolygon::centroid() const {
  Point c{};
  for (const Point& p : vertices_) c += p;
  return vertices_.empty() ? c : c / static_cast<double>(vertices_.size());
}

PiecewiseCircularCurve::PiecewiseCircularCurve(std::vector<CircleArc> arcs)
    : arcs_(std::move(arcs)) {
  std::vector<Point> pts;
  for (const auto& a : arcs_) {
    for (int k = 0; k <= 8; ++k) pts.push_back(a.point_at_angle(a.angle_at(k / 8.0)));
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      diameter_ = std::max(diameter_, distance(pts[i], pts[j]));
}

const CircleArc& PiecewiseCircularCurve::arc(std::ptrdiff_t i) const {
  return arcs_[wrap_index(i, arcs_.size())];
}

SupportOval SupportOval::ellipse(double a, double b) {
  SupportOval o;
  o.kind_ = Kind::ellipse;
  o.params_ = {a, b};
  o.update_diameter();
  return o;
}

SupportOval SupportOval::circle(double r) { return fourier(r, {}); }

SupportOval SupportOval::fourier(double c0, std::vector<std::pair<double, double>> harmonics) {
  SupportOval o;
  o.kind_ = Kind::fourier;
  o.params_ = {c0};
  for (auto [a, b] : harmonics) {
    o.params_.push_back(a);
    o.params_.push_back(b);
  }
  o.update_diameter();
  return o;
}

void SupportOval::update_diameter() {
  diameter_ = 0.0;
  constexpr int n = 720;
  for (int i = 0; i < n; ++i) {
    const double th = kPi * i / n;
    diameter_ = std::max(diameter_, eval(th).h + eval(th + kPi).h);
  }
}

SupportOval SupportOval::rotated(double angle) const {
  SupportOval o = *this;
  o.rotation_ += angle;
  o.center_ = rotate(center_, angle);
  return o;
}

SupportOval SupportOval::translated(Vec2 offset) const {
  SupportOval o = *this;
  o.center_ += offset;
  return o;
}

SupportValue SupportOval::eval_base(double phi) const {
  if (kind_ == Kind::ellipse) {
    const double a = params_[0], b = params_[1];
    const double c = std::cos(phi), s = std::sin(phi);
    const double h = std::sqrt(a * a * c * c + b * b * s * s);
    const double k = b * b - a * a;
    const double dh = k * s * c / h;
    const double d2h = (k * (c * c - s * s) - dh * dh) / h;
    return {h, dh, d2h};
  }
  SupportValue v{params_[0], 0.0, 0.0};
  const std::size_t harmonics = (params_.size() - 1) / 2;
  for (std::size_t k = 1; k <= harmonics; ++k) {
    const double ak = params_[2 * k - 1], bk = params_[2 * k];
    const double kd = static_cast<double>(k);
    const double c = std::cos(kd * phi), s = std::sin(kd * phi);
    v.h += ak * c + bk * s;
    v.dh += kd * (-ak * s + bk * c);
    v.d2h -= kd * kd * (ak * c + bk * s);
  }
  return v;
}

SupportValue SupportOval::eval(double theta) const {
  SupportValue v = eval_base(theta - rotation_);
  if (center_.x != 0.0 || center_.y != 0.0) {
    const Vec2 u = unit_vector(theta);
    v.h += dot(center_, u);
    v.dh += dot(center_, perp(u));
    v.d2h -= dot(center_, u);
  }
  return v;
}

Point SupportOval::point(double theta) const {
  const auto v = eval(theta);
  const Vec2 u = unit_vector(theta);
  return u * v.h + perp(u) * v.dh;
}

Diagnostics validate(const ConvexBody& body) {
  return std::visit(overloaded{
                        [](const ConvexPolygon& p) { return validate_polygon(p); },
                        [](const PiecewiseCircularCurve& c) { return validate_pcc(c); },
                        [](const SupportOval& o) { return validate_oval(o); },
                    },
                    body);
}

void require_valid(const ConvexBody& body) {
  const Diagnostics d = validate(body);
  if (!d) throw GeometryError(ErrorKind::invalid_body, d.invariant + ": " + d.message);
}

double length_scale(const ConvexBody& body) {
  return std::visit(overloaded{
                        [](const ConvexPolygon& p) { return polygon_diameter(p); },
                        [](const PiecewiseCircularCurve& c) { return pcc_diameter(c); },
                        [](const SupportOval& o) { return oval_diameter(o); },
                    },
                    body);
}

double exterior_distance(const ConvexBody& body, Point apex) {
  return std::visit(overloaded{
                        [&](const ConvexPolygon& p) { return polygon_exterior_distance(p, apex); },
                        [&](const PiecewiseCircularCurve& c) { return pcc_exterior_distance(c, apex); },
                        [&](const SupportOval& o) { return oval_max_excess(o, apex, 256).second; },
                    },
                    body);
}

TangentProbe tangent_probe(const ConvexBody& body, Point apex) {
  return std::visit(overloaded{
                        [&](const ConvexPolygon& p) { return polygon_probe(p, apex); },
                        [&](const PiecewiseCircularCurve& c) { return pcc_probe(c, apex); },
                        [&](const SupportOval& o) { return oval_probe(o, apex); },
                    },
                    body);
}

SideExtensionProbe side_extension_probe(const ConvexPolygon& poly, Point apex) {
  const double tol = Tolerance{polygon_diameter(poly)}.length();
  if (polygon_exterior_distance(poly, apex) <= tol) {
    throw GeometryError(ErrorKind::inside_body, "apex is not exterior to the polygon");
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (std::abs(edge_outside_distance(poly, i, apex)) > tol) continue;
    const Point a = poly.vertex(static_cast<std::ptrdiff_t>(i));
    const Point b = poly.vertex(static_cast<std::ptrdiff_t>(i) + 1);
    SideExtensionProbe out;
    out.side = i;
    const bool a_nearer = distance(apex, a) < distance(apex, b);
    out.near_end = a_nearer ? a : b;
    out.far_end = a_nearer ? b : a;
    out.collinear = {distance(apex, out.near_end), distance(apex, out.far_end)};

    // The other tangency is the vertex seen at the widest angle from the side line.
    const Vec2 along = (out.near_end - apex) / out.collinear.min;
    double widest = -1.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (k == i || k == (i + 1) % poly.size()) continue;
      const Vec2 w = poly.vertices()[k] - apex;
      const double ang = std::atan2(std::abs(cross(along, w)), dot(along, w));
      if (ang > widest) {
        widest = ang;
        out.opposite_point = poly.vertices()[k];
      }
    }
    out.opposite_length = distance(apex, out.opposite_point);
    out.collinear_is_left = cross(out.opposite_point - apex, out.near_end - apex) > 0.0;
    return out;
  }
  throw GeometryError(ErrorKind::not_on_side_extension,
                      "apex is not on the extension of any polygon side");
}

double parameter_period(const ConvexBody& body) {
  return std::visit(overloaded{
                        [](const ConvexPolygon& p) { return p.perimeter(); },
                        [](const PiecewiseCircularCurve& c) { return static_cast<double>(c.size()); },
                        [](const SupportOval&) { return kTwoPi; },
                    },
                    body);
}

BoundarySample boundary_point(const ConvexBody& body, double t) {
  const double period = parameter_period(body);
  if (!(t >= 0.0 && t < period)) {
    throw GeometryError(ErrorKind::out_of_domain, "boundary parameter outside [0, period)");
  }
  return std::visit(
      overloaded{
          [&](const ConvexPolygon& p) {
            double remaining = t;
            for (std::size_t i = 0; i < p.size(); ++i) {
              const Vec2 e = p.edge(static_cast<std::ptrdiff_t>(i));
              const double len = norm(e);
              if (remaining < len || i + 1 == p.size()) {
                return BoundarySample{p.vertices()[i] + e * (remaining / len), e / len};
              }
              remaining -= len;
            }
            return BoundarySample{};
          },
          [&](const PiecewiseCircularCurve& c) {
            const auto k = static_cast<std::size_t>(t);
            const CircleArc& arc = c.arcs()[k];
            const double angle = arc.angle_at(t - static_cast<double>(k));
            return BoundarySample{arc.point_at_angle(angle), arc.tangent_at_angle(angle)};
          },
          [&](const SupportOval& o) { return BoundarySample{o.point(t), o.tangent(t)}; },
      },
      body);
}

SupportSample support(const ConvexBody& body, double theta) {
  return std::visit(
      overloaded{
          [&](const ConvexPolygon& p) {
            const Vec2 u = unit_vector(theta);
            SupportSample s{-std::numeric_limits<double>::infinity(), {}};
            for (const Point& v : p.vertices()) {
              if (dot(v, u) > s.h) s = {dot(v, u), v};
            }
            return s;
          },
          [&](const PiecewiseCircularCurve& c) {
            double f = 0.0;
            const CircleArc* arc = pcc_arc_for_normal(c, theta, &f);
            const double angle = arc->angle_at(f);
            // Within an arc the normal equals theta; at a gap use the nearest endpoint.
            const Point pt = arc->point_at_angle(angle);
            return SupportSample{dot(pt, unit_vector(theta)), pt};
          },
          [&](const SupportOval& o) { return SupportSample{o.eval(theta).h, o.point(theta)}; },
      },
      body);
}

double curvature(const SupportOval& oval, double theta) {
  const double rho = oval.radius_of_curvature(theta);
  if (!(rho > 0.0)) {
    throw GeometryError(ErrorKind::invalid_body, "radius of curvature h+h'' is not positive");
  }
  return 1.0 / rho;
}

}  // namespace equitangent
