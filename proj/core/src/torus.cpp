#include "equitangent/torus.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <tuple>

#include "equitangent/contour.hpp"
#include "equitangent/dodecagon.hpp"

namespace equitangent {

namespace {

double wrap_param(double s, double period) {
  double w = std::fmod(s, period);
  if (w < 0.0) w += period;
  return w >= period ? 0.0 : w;
}

void require_smooth(const ConvexBody& body) {
  if (std::holds_alternative<ConvexPolygon>(body)) {
    throw GeometryError(ErrorKind::invalid_body, "torus analysis needs a smooth body");
  }
  require_valid(body);
}

struct PairAngles {
  double at_s = 0.0;  // chord-tangent angle at X(s), forward tangent side
  double at_t = 0.0;  // chord-tangent angle at Y(t), backward tangent side
  bool same_arc = false;
};

PairAngles pair_angles(const ConvexBody& body, double period, double s, double t) {
  s = wrap_param(s, period);
  t = wrap_param(t, period);
  PairAngles out;
  if (std::holds_alternative<PiecewiseCircularCurve>(body) && std::floor(s) == std::floor(t)) {
    out.same_arc = true;
    return out;
  }
  const BoundarySample x = boundary_point(body, s);
  const BoundarySample y = boundary_point(body, t);
  out.at_s = wrap_signed(polar_angle(y.point - x.point) - polar_angle(x.tangent));
  out.at_t = wrap_signed(polar_angle(-y.tangent) - polar_angle(x.point - y.point));
  return out;
}

// Symmetric in (s, t), continuous, zero exactly on the curve.
double symmetric_gap(const ConvexBody& body, double period, double s, double t) {
  const PairAngles a = pair_angles(body, period, s, t);
  return a.same_arc ? 0.0 : a.at_s - a.at_t;
}

// Divided by the squared chordal distance so it stays away from zero near
// the diagonal except at curvature extrema.
double desingularized_gap(const ConvexBody& body, double period, double s, double t) {
  const double sn = std::sin(kPi * (t - s) / period);
  return symmetric_gap(body, period, s, t) / (sn * sn);
}

std::pair<int, int> winding(const std::vector<Point>& unwrapped, double period) {
  const Point first = unwrapped.front();
  const Point last = unwrapped.back();
  Point closing = first;
  closing.x -= period * std::round((first.x - last.x) / period);
  closing.y -= period * std::round((first.y - last.y) / period);
  const double ws = (closing.x - first.x) / period;
  const double wt = (closing.y - first.y) / period;
  const double p = std::round(ws), q = std::round(wt);
  if (std::abs(ws - p) > 0.01 || std::abs(wt - q) > 0.01) {
    throw GeometryError(ErrorKind::broken_loop, "loop winding is not integral");
  }
  return {static_cast<int>(p), static_cast<int>(q)};
}

void normalize_class(TorusLoop& loop) {
  if (loop.class_p < 0 || (loop.class_p == 0 && loop.class_q < 0)) {
    loop.class_p = -loop.class_p;
    loop.class_q = -loop.class_q;
  }
}

struct Segment {
  Point a{};
  Point b{};
};

std::vector<Segment> torus_segments(const TorusLoop& loop) {
  const auto pts = unwrap_loop(loop);
  std::vector<Segment> out;
  const double P = loop.period;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point a = pts[i];
    Point b = pts[(i + 1) % pts.size()];
    if (i + 1 == pts.size()) {
      b.x -= P * std::round((b.x - a.x) / P);
      b.y -= P * std::round((b.y - a.y) / P);
    }
    const Vec2 shift{-P * std::floor(a.x / P), -P * std::floor(a.y / P)};
    out.push_back({a + shift, b + shift});
  }
  return out;
}

int crossings(const Segment& s1, const Segment& s2) {
  const Vec2 r = s1.b - s1.a;
  const Vec2 w = s2.b - s2.a;
  const Vec2 qp = s2.a - s1.a;
  const double denom = cross(r, w);
  const double scale = norm(r) * norm(w);
  if (std::abs(denom) <= 1e-14 * scale) {
    if (std::abs(cross(qp, r)) <= 1e-14 * norm(qp) * norm(r) + 1e-300) {
      const double rr = norm2(r);
      const double t0 = rr > 0.0 ? dot(qp, r) / rr : 0.0;
      const double t1 = rr > 0.0 ? dot(s2.b - s1.a, r) / rr : 0.0;
      if (std::max(t0, t1) > 0.0 && std::min(t0, t1) < 1.0) {
        throw GeometryError(ErrorKind::degenerate, "torus loops overlap along a segment");
      }
    }
    return 0;
  }
  const double u = cross(qp, w) / denom;
  const double v = cross(qp, r) / denom;
  return (u >= 0.0 && u < 1.0 && v >= 0.0 && v < 1.0) ? 1 : 0;
}

}  // namespace

TorusField torus_field(const ConvexBody& body) {
  require_smooth(body);
  const double period = parameter_period(body);
  TorusField f;
  f.period = period;
  f.g = [body, period](double s, double t) {
    const double gap = std::abs(wrap_signed(kTwoPi * (t - s) / period));
    if (gap < kTwoPi * 0.01) {
      throw GeometryError(ErrorKind::out_of_domain, "pair lies in the diagonal band");
    }
    const PairAngles a = pair_angles(body, period, s, t);
    if (a.same_arc) return 0.0;
    // Apex ahead of X along its tangent: the angles are at_s and at_t.
    if (a.at_s + a.at_t < kPi) return a.at_t - a.at_s;
    return a.at_s - a.at_t;
  };
  return f;
}

std::vector<Point> unwrap_loop(const TorusLoop& loop) {
  std::vector<Point> out;
  out.reserve(loop.points.size());
  const double P = loop.period;
  for (const Point& p : loop.points) {
    if (out.empty()) {
      out.push_back(p);
      continue;
    }
    Point q = p;
    q.x -= P * std::round((q.x - out.back().x) / P);
    q.y -= P * std::round((q.y - out.back().y) / P);
    out.push_back(q);
  }
  return out;
}

std::vector<TorusLoop> trace_torus_curve(const ConvexBody& body, int grid) {
  if (grid < 128) throw GeometryError(ErrorKind::invalid_parameters, "torus grid must be >= 128");
  require_smooth(body);
  const double period = parameter_period(body);
  const double h = period / grid;
  const bool arcs = std::holds_alternative<PiecewiseCircularCurve>(body);

  auto masked = [&](Point p) {
    if (!arcs) return false;
    const double s = wrap_param(p.x, period), t = wrap_param(p.y, period);
    return std::floor(s) == std::floor(t) ||
           std::abs(wrap_signed(kTwoPi * (t - s) / period)) < kTwoPi * 0.01;
  };
  auto eval = [&](Point p) {
    if (masked(p)) return std::numeric_limits<double>::quiet_NaN();
    return desingularized_gap(body, period, p.x, p.y);
  };
  NodeGrid nodes = sample_grid({0.0, 0.5 * h}, h, h, grid, grid, eval);

  const double tol = Tolerance{}.length();
  const bool vanishes = std::all_of(nodes.values.begin(), nodes.values.end(),
                                    [&](double v) { return std::isnan(v) || std::abs(v) <= tol; });
  if (vanishes) throw GeometryError(ErrorKind::degenerate, "torus field vanishes identically");

  // Chains stop within a cell or so of the masked region.
  auto touches_band = [&](Point p) {
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        if (masked({p.x + i * h, p.y + j * h})) return true;
      }
    }
    return false;
  };

  ContourOptions opt;
  opt.periodic = true;
  opt.evaluate = eval;
  const auto lines = trace_zero_set(nodes, opt);

  std::vector<TorusLoop> loops;
  for (const auto& line : lines) {
    TorusLoop loop;
    loop.period = period;
    if (line.closed) {
      std::tie(loop.class_p, loop.class_q) = winding(line.points, period);
    } else {
      const Point a = line.points.front(), b = line.points.back();
      if (!touches_band(a) || !touches_band(b)) {
        throw GeometryError(ErrorKind::broken_loop, "open curve on the torus");
      }
      // The closing path runs inside one lift of the band, which fixes q - p;
      // p + q is only defined mod 2, so take it as small as possible.
      const int k = static_cast<int>(std::round(((b.y - b.x) - (a.y - a.x)) / period));
      loop.class_p = static_cast<int>(std::floor(-k / 2.0));
      loop.class_q = loop.class_p + k;
      loop.through_band = true;
    }
    normalize_class(loop);
    loop.points.reserve(line.points.size());
    for (const Point& p : line.points) {
      loop.points.push_back({wrap_param(p.x, period), wrap_param(p.y, period)});
    }
    loops.push_back(std::move(loop));
  }
  loops.push_back(diagonal_loop(period, grid));
  return loops;
}

bool is_essential(const TorusLoop& loop) {
  return (loop.class_p == 1 && loop.class_q == -1) || (loop.class_p == -1 && loop.class_q == 1);
}

std::vector<TorusLoop> essential_loops(const std::vector<TorusLoop>& loops) {
  std::vector<TorusLoop> out;
  std::copy_if(loops.begin(), loops.end(), std::back_inserter(out), is_essential);
  return out;
}

TorusLoop diagonal_loop(double period, int n) {
  TorusLoop loop;
  loop.period = period;
  loop.class_p = 1;
  loop.class_q = 1;
  loop.synthetic = true;
  for (int i = 0; i < n; ++i) {
    const double s = period * i / n;
    loop.points.push_back({s, s});
  }
  return loop;
}

int count_intersections(const TorusLoop& a, const TorusLoop& b) {
  if (a.points.size() < 2 || b.points.size() < 2 || a.period != b.period) {
    throw GeometryError(ErrorKind::invalid_parameters, "loops need 2+ points and equal periods");
  }
  const double P = a.period;
  const auto sa = torus_segments(a);
  const auto sb = torus_segments(b);
  int count = 0;
  for (const Segment& s1 : sa) {
    const double x0 = std::min(s1.a.x, s1.b.x), x1 = std::max(s1.a.x, s1.b.x);
    const double y0 = std::min(s1.a.y, s1.b.y), y1 = std::max(s1.a.y, s1.b.y);
    for (const Segment& s2 : sb) {
      for (int k = -1; k <= 1; ++k) {
        for (int l = -1; l <= 1; ++l) {
          const Vec2 shift{k * P, l * P};
          const Segment t{s2.a + shift, s2.b + shift};
          if (std::max(t.a.x, t.b.x) < x0 || std::min(t.a.x, t.b.x) > x1 ||
              std::max(t.a.y, t.b.y) < y0 || std::min(t.a.y, t.b.y) > y1) {
            continue;
          }
          count += crossings(s1, t);
        }
      }
    }
  }
  return count;
}

TorusLoop walk_to_torus(const ConvexBody& body, const std::vector<Point>& walk, int n_samples) {
  require_smooth(body);
  const double period = parameter_period(body);
  TorusLoop loop;
  loop.period = period;
  for (const Point& apex : sample_closed_polyline(walk, n_samples)) {
    const TangentProbe probe = tangent_probe(body, apex);
    loop.points.push_back({wrap_param(probe.left.param, period), wrap_param(probe.right.param, period)});
  }
  std::tie(loop.class_p, loop.class_q) = winding(unwrap_loop(loop), period);
  normalize_class(loop);
  return loop;
}

}  // namespace equitangent
