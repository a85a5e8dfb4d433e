#include "equitangent/dodecagon.hpp"

#include <cmath>

namespace equitangent {

namespace {

constexpr double kSixtyDegrees = kPi / 3.0;

// Angle at vertex `at` between rays to `p` and `q`.
double vertex_angle(Point p, Point at, Point q) { return vector_angle(p - at, q - at); }

ChordState rotate_state(const ChordState& s, Point center, double angle) {
  auto rot_line = [&](const DirectedLine& l) {
    return DirectedLine(rotate_about(l.origin(), center, angle), rotate(l.direction(), angle));
  };
  return {rotate_about(s.first, center, angle), rotate_about(s.second, center, angle),
          rot_line(s.support_first), rot_line(s.support_second)};
}

enum class StepKind { slide_first, slide_second, revolve_first, revolve_second, none };

StepKind classify_step(const ChordState& a, const ChordState& b, double tol) {
  if (distance(a.first, b.first) > tol) return StepKind::slide_first;
  if (distance(a.second, b.second) > tol) return StepKind::slide_second;
  if (vector_angle(a.support_first.direction(), b.support_first.direction()) > 1e-12)
    return StepKind::revolve_first;
  if (vector_angle(a.support_second.direction(), b.support_second.direction()) > 1e-12)
    return StepKind::revolve_second;
  return StepKind::none;
}

DirectedLine revolve(const DirectedLine& from, const DirectedLine& to, double f) {
  const double turn = wrap_signed(polar_angle(to.direction()) - polar_angle(from.direction()));
  return DirectedLine(from.origin(), rotate(from.direction(), f * turn));
}

ChordState interpolate_step(const ChordState& a, const ChordState& b, StepKind kind, double f) {
  ChordState s = a;
  switch (kind) {
    case StepKind::slide_first:
      s.first = a.first + (b.first - a.first) * f;
      s.support_first = DirectedLine(s.first, a.support_first.direction());
      break;
    case StepKind::slide_second:
      s.second = a.second + (b.second - a.second) * f;
      s.support_second = DirectedLine(s.second, a.support_second.direction());
      break;
    case StepKind::revolve_first:
      s.support_first = revolve(a.support_first, b.support_first, f);
      break;
    case StepKind::revolve_second:
      s.support_second = revolve(a.support_second, b.support_second, f);
      break;
    case StepKind::none:
      break;
  }
  return s;
}

}  // namespace

Dodecagon build_dodecagon(const DodecagonParams& p) {
  if (!(p.side > 0.0) || !std::isfinite(p.side)) {
    throw GeometryError(ErrorKind::invalid_parameters, "side must be positive");
  }
  if (!(p.phi > 0.0)) {
    throw GeometryError(ErrorKind::invalid_parameters, "phi > 0 required");
  }
  if (!(p.phi < p.psi)) {
    throw GeometryError(ErrorKind::invalid_parameters, "phi < psi required");
  }
  if (!(p.phi + p.psi < kSixtyDegrees)) {
    throw GeometryError(ErrorKind::invalid_parameters,
                        "phi + psi must stay below 60 degrees for convexity");
  }
  // Regular hexagon of circumradius `side`.
  std::array<Point, 6> hex{};
  for (int i = 0; i < 6; ++i) hex[i] = unit_vector(i * kSixtyDegrees) * p.side;

  // Sine rule in triangle A_i B_i A_{i+1} on base A_i A_{i+1}.
  const double ab = p.side * std::sin(p.psi) / std::sin(p.phi + p.psi);
  std::vector<Point> vertices;
  vertices.reserve(12);
  for (int i = 0; i < 6; ++i) {
    const Point a = hex[i];
    const Vec2 along = (hex[(i + 1) % 6] - a) / p.side;
    vertices.push_back(a);
    vertices.push_back(a + rotate(along, -p.phi) * ab);
  }
  Dodecagon d(p, ConvexPolygon(std::move(vertices)));
  const Diagnostics diag = validate(ConvexBody{d.polygon()});
  if (!diag) {
    throw GeometryError(ErrorKind::invalid_parameters,
                        "dodecagon is not strictly convex: " + diag.message);
  }
  return d;
}

DerivedAngles derived_angles(const Dodecagon& d) {
  DerivedAngles out;
  out.theta = vertex_angle(d.A(2), d.A(3), d.B(1));
  out.delta = vertex_angle(d.B(3), d.A(2), d.A(4));
  const double phi = d.params().phi;
  if (!(phi < out.theta) || !(phi < out.delta)) {
    throw GeometryError(ErrorKind::invalid_parameters,
                        "construction invalid: phi < theta and phi < delta must hold");
  }
  return out;
}

std::vector<ChordState> chord_motion(const Dodecagon& d) {
  auto line = [](Point origin, Point from, Point to) { return DirectedLine(origin, to - from); };
  auto A = [&](int i) { return d.A(i); };
  auto B = [&](int i) { return d.B(i); };
  auto state = [&](Point x, Point y, std::pair<Point, Point> sx, std::pair<Point, Point> sy) {
    return ChordState{x, y, line(x, sx.first, sx.second), line(y, sy.first, sy.second)};
  };
  const std::array<ChordState, kStatesPerBlock> block{
      state(A(1), A(3), {A(1), B(1)}, {A(3), B(3)}),
      state(B(1), A(3), {A(1), B(1)}, {A(3), B(3)}),
      state(B(1), A(3), {B(1), A(2)}, {A(3), B(3)}),
      state(A(2), A(3), {B(1), A(2)}, {A(3), B(3)}),
      state(A(2), A(3), {A(2), B(2)}, {A(3), B(3)}),
      state(A(2), B(3), {A(2), B(2)}, {A(3), B(3)}),
      state(A(2), B(3), {A(2), B(2)}, {B(3), A(4)}),
      state(A(2), A(4), {A(2), B(2)}, {B(3), A(4)}),
      state(A(2), A(4), {A(2), B(2)}, {A(4), B(4)}),
  };
  std::vector<ChordState> states;
  states.reserve(kBlocks * kStatesPerBlock);
  for (int j = 0; j < kBlocks; ++j) {
    for (const auto& s : block) states.push_back(rotate_state(s, d.center(), j * kSixtyDegrees));
  }
  return states;
}

std::optional<Point> state_apex(const ChordState& s) {
  return intersect_lines(s.support_first, s.support_second);
}

StateAngles state_angles(const ChordState& s, std::optional<Point> witness) {
  if (distance(s.first, s.second) == 0.0) {
    throw GeometryError(ErrorKind::degenerate, "chord endpoints coincide");
  }
  if (!witness) witness = state_apex(s);
  if (!witness) {
    throw GeometryError(ErrorKind::parallel, "support lines are parallel; pass a witness");
  }
  StateAngles out;
  out.beta = angle_between(DirectedLine::through(s.first, s.second), s.support_first, *witness);
  out.alpha = angle_between(DirectedLine::through(s.second, s.first), s.support_second, *witness);
  return out;
}

std::array<StateAngles, 8> symbolic_angle_table(const DodecagonParams& p,
                                                const DerivedAngles& d) {
  const double deg30 = deg_to_rad(30.0), deg60 = deg_to_rad(60.0), deg90 = deg_to_rad(90.0);
  const double phi = p.phi, psi = p.psi, theta = d.theta, delta = d.delta;
  return {{
      {deg30 + phi, deg90 - phi},
      {deg60 + phi - theta, deg60 - phi + theta},
      {deg60 - theta - psi, deg60 + theta - phi},
      {deg60 - psi, deg60 - phi},
      {phi, deg60 - phi},
      {deg30 - delta + phi, deg30 + delta - phi},
      {deg30 - delta + phi, deg30 + psi + delta},
      {deg30 + phi, deg30 + psi},
  }};
}

std::vector<ChordState> interpolate_motion(const std::vector<ChordState>& states,
                                           int samples_per_step) {
  if (samples_per_step < 2) {
    throw GeometryError(ErrorKind::invalid_parameters, "samples_per_step must be at least 2");
  }
  if (states.size() % kStatesPerBlock != 0) {
    throw GeometryError(ErrorKind::invalid_parameters, "motion must consist of whole blocks");
  }
  double scale = 0.0;
  for (const auto& s : states) scale = std::max(scale, distance(s.first, s.second));
  const double tol = Tolerance{scale}.length();

  std::vector<ChordState> out;
  for (std::size_t b = 0; b < states.size(); b += kStatesPerBlock) {
    out.push_back(states[b]);
    for (std::size_t k = b; k + 1 < b + kStatesPerBlock; ++k) {
      const ChordState& from = states[k];
      const ChordState& to = states[k + 1];
      const StepKind kind = classify_step(from, to, tol);
      for (int i = 1; i < samples_per_step; ++i) {
        if (i + 1 == samples_per_step) {
          out.push_back(to);
        } else {
          out.push_back(interpolate_step(from, to, kind,
                                         static_cast<double>(i) / (samples_per_step - 1)));
        }
      }
    }
  }
  return out;
}

std::vector<Point> outer_star(const std::vector<ChordState>& states) {
  std::vector<Point> pts;
  pts.reserve(states.size());
  for (const auto& s : states) {
    const auto apex = state_apex(s);
    if (!apex) throw GeometryError(ErrorKind::parallel, "support lines are parallel");
    pts.push_back(*apex);
  }
  return pts;
}

std::vector<Point> closed_polyline(const std::vector<Point>& points, double tolerance) {
  std::vector<Point> out;
  for (const Point& p : points) {
    if (out.empty() || distance(out.back(), p) > tolerance) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= tolerance) out.pop_back();
  return out;
}

}  // namespace equitangent
