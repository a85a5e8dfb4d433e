#pragma once

// The counterexample construction: a dodecagon built on a regular hexagon, the
// nine-step chord motion inside it, the star traced by the apex of the support
// lines, the piecewise circular smoothing, and the walk certificate.

#include <array>
#include <optional>
#include <vector>

#include "equitangent/bodies.hpp"
#include "equitangent/geom.hpp"

namespace equitangent {

struct DodecagonParams {
  double side = 1.0;                 // hexagon side length
  double phi = deg_to_rad(2.0);      // angle A2 A1 B1
  double psi = deg_to_rad(3.0);      // angle A1 A2 B1
};

// Vertices A1, B1, A2, B2, ..., A6, B6 counterclockwise around the origin, with
// A1 on the positive x axis. B_i sits outside side A_i A_{i+1}, closer to A_{i+1}.
class Dodecagon {
 public:
  Dodecagon(DodecagonParams params, ConvexPolygon polygon)
      : params_(params), polygon_(std::move(polygon)) {}

  const DodecagonParams& params() const { return params_; }
  const ConvexPolygon& polygon() const { return polygon_; }
  Point center() const { return {0.0, 0.0}; }

  // 1-based labels, cyclic mod 6.
  Point A(int i) const { return polygon_.vertex(2 * (i - 1)); }
  Point B(int i) const { return polygon_.vertex(2 * (i - 1) + 1); }

 private:
  DodecagonParams params_;
  ConvexPolygon polygon_;
};

// Throws GeometryError(invalid_parameters) unless 0 < phi < psi and the result
// is strictly convex.
Dodecagon build_dodecagon(const DodecagonParams& params);

struct DerivedAngles {
  double theta = 0.0;  // angle A2 A3 B1
  double delta = 0.0;  // angle B3 A2 A4
};

// Computed from coordinates. Throws GeometryError(invalid_parameters) if
// phi < theta or phi < delta fails.
DerivedAngles derived_angles(const Dodecagon& dodecagon);

// A chord of the polygon together with a support line at each endpoint.
struct ChordState {
  Point first{};
  Point second{};
  DirectedLine support_first{};   // through `first`
  DirectedLine support_second{};  // through `second`
};

// Six blocks of nine states; block j is block 0 rotated by j * 60 degrees, and
// the last state of each block equals the first state of the next one.
std::vector<ChordState> chord_motion(const Dodecagon& dodecagon);

inline constexpr int kStatesPerBlock = 9;
inline constexpr int kBlocks = 6;

// Intersection of the two support lines, if they are not parallel.
std::optional<Point> state_apex(const ChordState& state);

struct StateAngles {
  double beta = 0.0;   // at the first endpoint
  double alpha = 0.0;  // at the second endpoint
};

// Angles between the chord and each support line, measured on the side of the
// chord containing the witness (default: the apex of the support lines).
StateAngles state_angles(const ChordState& state,
                         std::optional<Point> apex_side_witness = std::nullopt);

// The closed-form (beta, alpha) pairs for the first eight states of a block.
std::array<StateAngles, 8> symbolic_angle_table(const DodecagonParams& params,
                                                const DerivedAngles& derived);

// Each of the eight steps of every block is sampled at `samples_per_step`
// evenly spaced points including both ends; shared ends appear once, so two
// samples per step reproduce chord_motion exactly. Sliding steps move the
// endpoint linearly along its side, revolving steps rotate the support line
// linearly in angle. Throws GeometryError(invalid_parameters) when
// samples_per_step < 2.
std::vector<ChordState> interpolate_motion(const std::vector<ChordState>& states,
                                           int samples_per_step);

// Apex of every state (one point per state, repeats kept). Throws
// GeometryError(parallel) if some state has parallel support lines.
std::vector<Point> outer_star(const std::vector<ChordState>& states);

// Drops consecutive repeats (and a repeated closing point) within `tolerance`.
std::vector<Point> closed_polyline(const std::vector<Point>& points, double tolerance);

// ---------------------------------------------------------------------------
// Smoothing

// Replaces vertex k by a small arc (index 2k) and side k by an arc of radius
// R_large (index 2k + 1) tangent to the side at its midpoint; each small arc is
// internally tangent to both neighbouring large circles. Throws
// GeometryError(invalid_parameters) when the radii do not close up convexly.
PiecewiseCircularCurve smooth(const ConvexPolygon& polygon, double r_small, double R_large);

// Boundary parameter of the smoothed curve corresponding to a polygon boundary
// point with the given support line: vertices map across their small arc by
// normal-angle fraction, side points map along their large arc by length fraction.
double smoothed_parameter(const ConvexPolygon& polygon, const PiecewiseCircularCurve& smoothed,
                          Point point, const DirectedLine& support);

struct SmoothedChord {
  BoundarySample first;
  BoundarySample second;
  std::optional<Point> apex;
};

SmoothedChord smooth_chord(const ConvexPolygon& polygon, const PiecewiseCircularCurve& smoothed,
                           const ChordState& state);

// Apex of every smoothed chord; states with parallel tangents are skipped.
std::vector<Point> smoothed_star(const ConvexPolygon& polygon,
                                 const PiecewiseCircularCurve& smoothed,
                                 const std::vector<ChordState>& states);

// ---------------------------------------------------------------------------
// Certificate

struct WalkSample {
  std::size_t index = 0;
  Point apex{};
  double alpha = 0.0;
  double beta = 0.0;
  double len_left = 0.0;
  double len_right = 0.0;
  double defect() const { return len_left - len_right; }
};

struct WalkCertificate {
  double min_defect = 0.0;     // min of L_left - L_right
  double max_defect = 0.0;
  double min_angle_gap = 0.0;  // min of alpha - beta
  bool all_same_sign = false;  // |defect| above tolerance everywhere, one sign
  bool triangle_ok = false;    // alpha + beta < pi everywhere
  bool degenerate = false;     // |defect| within tolerance everywhere
  int zero_crossings = 0;      // cyclic sign changes of the defect
  std::vector<WalkSample> samples;
};

// n points spaced uniformly by arc length along the closed polyline.
std::vector<Point> sample_closed_polyline(const std::vector<Point>& walk, int n);

// Probes the body from n_samples points of the closed walk. Throws
// GeometryError(inside_body) if a sample is not exterior.
WalkCertificate certify_walk(const ConvexBody& body, const std::vector<Point>& walk,
                             int n_samples);

}  // namespace equitangent
