#include "equitangent/loci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "equitangent/contour.hpp"
#include "equitangent/torus.hpp"

namespace equitangent {

double Box::frame_distance(Point p) const {
  return std::min({p.x - lo.x, hi.x - p.x, p.y - lo.y, hi.y - p.y});
}

const char* to_string(LocusKind kind) {
  switch (kind) {
    case LocusKind::boundary_to_boundary: return "boundary_to_boundary";
    case LocusKind::boundary_to_infinity: return "boundary_to_infinity";
    case LocusKind::infinity_to_infinity: return "infinity_to_infinity";
    case LocusKind::closed: return "closed";
  }
  return "closed";
}

Box default_box(const ConvexBody& body) {
  const double right = support(body, 0.0).h;
  const double top = support(body, 0.5 * kPi).h;
  const double left = -support(body, kPi).h;
  const double bottom = -support(body, 1.5 * kPi).h;
  const Point mid{0.5 * (left + right), 0.5 * (bottom + top)};
  const double half = 3.0 * length_scale(body);
  return {{mid.x - half, mid.y - half}, {mid.x + half, mid.y + half}};
}

double equitangent_value(const ConvexBody& body, Point apex) {
  try {
    return tangent_probe(body, apex).defect();
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::inside_body) return std::numeric_limits<double>::quiet_NaN();
    if (e.kind() != ErrorKind::side_extension) throw;
  }
  const SideExtensionProbe p = side_extension_probe(std::get<ConvexPolygon>(body), apex);
  const double collinear = std::clamp(p.opposite_length, p.collinear.min, p.collinear.max);
  return p.collinear_is_left ? collinear - p.opposite_length : p.opposite_length - collinear;
}

ScalarField equitangent_field(const ConvexBody& body, std::optional<Box> box) {
  require_valid(body);
  ScalarField f;
  f.domain = box ? *box : default_box(body);
  f.scale = length_scale(body);
  const double tol = Tolerance{f.scale}.length();
  f.eval = [body](Point p) { return equitangent_value(body, p); };
  f.exterior = [body, tol](Point p) { return exterior_distance(body, p) > tol; };
  f.boundary_distance = [body](Point p) { return std::abs(exterior_distance(body, p)); };
  return f;
}

namespace {

double extent(const std::vector<Point>& pts) {
  double x0 = pts.front().x, x1 = x0, y0 = pts.front().y, y1 = y0;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

}  // namespace

std::vector<LocusComponent> trace_locus(const ScalarField& field, int resolution) {
  if (resolution < 64) throw GeometryError(ErrorKind::invalid_parameters, "resolution must be >= 64");
  const Box& box = field.domain;
  const double dx = box.width() / resolution;
  const double dy = box.height() / resolution;
  const NodeGrid grid = sample_grid({box.lo.x + 0.5 * dx, box.lo.y + 0.5 * dy}, dx, dy, resolution,
                                    resolution, field.eval);

  const double tol = Tolerance{field.scale}.length();
  const bool vanishes = std::all_of(grid.values.begin(), grid.values.end(),
                                    [&](double v) { return std::isnan(v) || std::abs(v) <= tol; });
  if (vanishes) throw GeometryError(ErrorKind::degenerate, "equitangent field vanishes identically");

  ContourOptions opt;
  opt.evaluate = field.eval;
  const auto lines = trace_zero_set(grid, opt);

  const double cell = std::max(dx, dy);
  auto end_kind = [&](Point p) {
    if (field.boundary_distance && field.boundary_distance(p) <= 3.0 * cell) return 'b';
    if (box.frame_distance(p) <= 3.0 * cell) return 'i';
    return 'n';
  };
  std::vector<LocusComponent> out;
  for (const auto& line : lines) {
    if (line.closed && extent(line.points) < 2.0 * cell) continue;
    LocusComponent c;
    c.points = line.points;
    if (!line.closed && line.points.size() > 1) {
      const char a = end_kind(line.points.front());
      const char b = end_kind(line.points.back());
      if (a == 'b' && b == 'b') c.kind = LocusKind::boundary_to_boundary;
      else if ((a == 'b' && b == 'i') || (a == 'i' && b == 'b')) c.kind = LocusKind::boundary_to_infinity;
      else if (a == 'i' && b == 'i') c.kind = LocusKind::infinity_to_infinity;
    }
    out.push_back(std::move(c));
  }
  auto leftmost = [](const LocusComponent& c) {
    return *std::min_element(c.points.begin(), c.points.end(), [](Point a, Point b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
  };
  std::stable_sort(out.begin(), out.end(), [&](const LocusComponent& a, const LocusComponent& b) {
    const Point la = leftmost(a), lb = leftmost(b);
    return la.x < lb.x || (la.x == lb.x && la.y < lb.y);
  });
  return out;
}

namespace {

double segment_distance(Point p, Point a, Point b) {
  const Vec2 ab = b - a;
  const double len2 = norm2(ab);
  const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + ab * t);
}

void require_oval_like(const ConvexBody& body) {
  if (std::holds_alternative<ConvexPolygon>(body)) {
    throw GeometryError(ErrorKind::invalid_body, "isoptic needs a smooth body");
  }
  require_valid(body);
}

void require_view_angle(double view_angle) {
  if (!(view_angle > 0.0 && view_angle < kPi)) {
    throw GeometryError(ErrorKind::out_of_domain, "view angle must lie in (0, pi)");
  }
}

// Apex of the support lines with outward normals theta and theta + pi - view.
Point isoptic_apex(const ConvexBody& body, double view_angle, double theta) {
  const double other = theta + kPi - view_angle;
  const Vec2 u1 = unit_vector(theta), u2 = unit_vector(other);
  const double h1 = support(body, theta).h, h2 = support(body, other).h;
  const double det = cross(u1, u2);
  return {(h1 * u2.y - h2 * u1.y) / det, (u1.x * h2 - u2.x * h1) / det};
}

double isoptic_gap(const ConvexBody& body, double view_angle, double theta) {
  const Point apex = isoptic_apex(body, view_angle, theta);
  const Point first = support(body, theta).point;
  const Point second = support(body, theta + kPi - view_angle).point;
  return distance(apex, first) - distance(apex, second);
}

template <class F>
double bisect_root(F&& f, double lo, double hi, double flo, double tol) {
  const bool lo_positive = flo >= 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) >= 0.0) == lo_positive) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double golden_extremum(F&& f, double a, double b, bool maximum) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  auto better = [&](double x, double y) { return maximum ? x > y : x < y; };
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-12) {
    if (better(fc, fd)) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double max_distance_to(const std::vector<LocusComponent>& reference, const std::vector<Point>& points) {
  double worst = 0.0;
  for (const Point& p : points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : reference) {
      if (c.points.size() == 1) best = std::min(best, distance(p, c.points.front()));
      for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
        best = std::min(best, segment_distance(p, c.points[i], c.points[i + 1]));
      }
    }
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Point> isoptic(const ConvexBody& body, double view_angle, int resolution) {
  require_oval_like(body);
  require_view_angle(view_angle);
  if (resolution < 8) throw GeometryError(ErrorKind::invalid_parameters, "resolution must be >= 8");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    const Point a = isoptic_apex(body, view_angle, kTwoPi * k / resolution);
    if (!std::isfinite(a.x) || !std::isfinite(a.y)) {
      throw GeometryError(ErrorKind::not_converged, "isoptic apex is not finite");
    }
    pts.push_back(a);
  }
  return pts;
}

std::vector<Point> equal_tangent_points_on_isoptic(const ConvexBody& body, double view_angle,
                                                   int resolution) {
  require_oval_like(body);
  require_view_angle(view_angle);
  if (resolution < 8) throw GeometryError(ErrorKind::invalid_parameters, "resolution must be >= 8");
  auto gap = [&](double theta) { return isoptic_gap(body, view_angle, theta); };
  const double step = kTwoPi / resolution;
  std::vector<double> theta(static_cast<std::size_t>(resolution)), value(theta.size());
  for (int k = 0; k < resolution; ++k) {
    theta[k] = (k + 0.5) * step;
    value[k] = gap(theta[k]);
  }
  const double tol = Tolerance{length_scale(body)}.length();
  if (std::all_of(value.begin(), value.end(), [&](double v) { return std::abs(v) <= tol; })) {
    throw GeometryError(ErrorKind::degenerate, "tangent lengths agree along the whole isoptic");
  }
  std::vector<Point> out;
  for (int k = 0; k < resolution; ++k) {
    const int n = (k + 1) % resolution;
    if ((value[k] >= 0.0) == (value[n] >= 0.0)) continue;
    const double hi = n == 0 ? theta[n] + kTwoPi : theta[n];
    const double root = bisect_root(gap, theta[k], hi, value[k], 1e-10);
    out.push_back(isoptic_apex(body, view_angle, root));
  }
  return out;
}

std::vector<CurvatureVertex> vertices(const SupportOval& oval, int n_samples) {
  require_valid(ConvexBody{oval});
  if (n_samples < 16) throw GeometryError(ErrorKind::invalid_parameters, "n_samples must be >= 16");
  std::vector<double> rho(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) rho[i] = oval.radius_of_curvature(kTwoPi * i / n_samples);
  const auto [lo, hi] = std::minmax_element(rho.begin(), rho.end());
  if (*hi - *lo <= Tolerance{oval.diameter()}.length()) {
    throw GeometryError(ErrorKind::degenerate, "constant curvature: every point is a vertex");
  }
  auto rho_at = [&](double t) { return oval.radius_of_curvature(t); };
  std::vector<CurvatureVertex> out;
  const double step = kTwoPi / n_samples;
  for (int i = 0; i < n_samples; ++i) {
    const double prev = rho[(i + n_samples - 1) % n_samples];
    const double next = rho[(i + 1) % n_samples];
    // Curvature maxima are radius minima.
    const bool rho_min = rho[i] < prev && rho[i] <= next;
    const bool rho_max = rho[i] > prev && rho[i] >= next;
    if (!rho_min && !rho_max) continue;
    const double t0 = i * step;
    double t = golden_extremum(rho_at, t0 - step, t0 + step, rho_max);
    t = wrap_angle(t);
    out.push_back({t, 1.0 / rho_at(t), rho_min});
  }
  return out;
}

std::vector<DoubleNormal> diameters(const SupportOval& oval, int n_samples) {
  require_valid(ConvexBody{oval});
  if (n_samples < 16) throw GeometryError(ErrorKind::invalid_parameters, "n_samples must be >= 16");
  auto width_slope = [&](double t) { return oval.eval(t).dh + oval.eval(t + kPi).dh; };
  const double step = kPi / n_samples;
  std::vector<double> theta(static_cast<std::size_t>(n_samples)), value(theta.size());
  for (int i = 0; i < n_samples; ++i) {
    theta[i] = (i + 0.25) * step;
    value[i] = width_slope(theta[i]);
  }
  const double tol = Tolerance{oval.diameter()}.length();
  if (std::all_of(value.begin(), value.end(), [&](double v) { return std::abs(v) <= tol; })) {
    throw GeometryError(ErrorKind::degenerate, "constant width: every chord through the center is a double normal");
  }
  std::vector<DoubleNormal> out;
  for (int i = 0; i < n_samples; ++i) {
    const int n = (i + 1) % n_samples;
    if ((value[i] >= 0.0) == (value[n] >= 0.0)) continue;
    const double hi = n == 0 ? theta[n] + kPi : theta[n];
    const double root = std::fmod(bisect_root(width_slope, theta[i], hi, value[i], 1e-13), kPi);
    DoubleNormal d;
    d.theta = root;
    d.first = oval.point(root);
    d.second = oval.point(root + kPi);
    d.length = distance(d.first, d.second);
    out.push_back(d);
  }
  return out;
}

std::vector<SymmetrySetBranch> symmetry_set(const ConvexBody& body, int resolution) {
  require_oval_like(body);
  std::vector<TorusLoop> loops;
  try {
    loops = trace_torus_curve(body, resolution);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::degenerate) throw;
    // Every pair is equitangent on a circle: all bitangent circles are concentric.
    const BoundarySample x = boundary_point(body, 0.0);
    const double t = 0.5 * parameter_period(body);
    const BoundarySample y = boundary_point(body, t);
    const auto c = intersect_lines(DirectedLine(x.point, perp(x.tangent)),
                                   DirectedLine(y.point, perp(y.tangent)));
    const Point center = c ? *c : x.point + (y.point - x.point) * 0.5;
    return {SymmetrySetBranch{0, {{center}}, {}}};
  }
  const double far = 100.0 * length_scale(body);
  std::vector<SymmetrySetBranch> out;
  for (std::size_t id = 0; id < loops.size(); ++id) {
    if (loops[id].synthetic) continue;
    SymmetrySetBranch branch;
    branch.loop_id = id;
    std::vector<Point> piece;
    auto flush = [&] {
      if (!piece.empty()) branch.pieces.push_back(std::move(piece));
      piece.clear();
    };
    for (const Point& st : loops[id].points) {
      const BoundarySample x = boundary_point(body, st.x);
      const BoundarySample y = boundary_point(body, st.y);
      const auto c = intersect_lines(DirectedLine(x.point, perp(x.tangent)),
                                     DirectedLine(y.point, perp(y.tangent)));
      if (!c || distance(*c, x.point) > far) {
        flush();
        branch.unbounded.emplace_back(st.x, st.y);
        continue;
      }
      piece.push_back(*c);
    }
    flush();
    out.push_back(std::move(branch));
  }
  return out;
}

}  // namespace equitangent
