#pragma once

// The curve of equal-tangent pairs on the torus of boundary parameter pairs
// (s, t), its loops and their homotopy classes.
//
// For boundary points X = X(s), Y = Y(t) with tangent lines meeting at A, the
// pair belongs to the curve when |AX| = |AY|, equivalently when the triangle
// AXY has equal angles at X and Y. Parallel tangents count when the chord is
// normal to both (a double normal).

#include <functional>
#include <vector>

#include "equitangent/bodies.hpp"
#include "equitangent/geom.hpp"

namespace equitangent {

struct TorusField {
  double period = 0.0;
  // angle at Y minus angle at X in triangle AXY; antisymmetric in (s, t).
  std::function<double(double, double)> g;
};

// Smooth bodies only (support ovals and piecewise circular curves). The field
// throws GeometryError(out_of_domain) within 1% of the period of the diagonal.
TorusField torus_field(const ConvexBody& body);

struct TorusLoop {
  // (s, t) pairs wrapped into [0, period); consecutive points are close on the torus.
  std::vector<Point> points;
  double period = 0.0;
  int class_p = 0;  // winding in s
  int class_q = 0;  // winding in t
  bool synthetic = false;
  // Piecewise circular bodies only: both ends of the traced chain touch the
  // same-arc region around the diagonal and the loop is closed through it, so
  // the class is defined up to multiples of (1, 1).
  bool through_band = false;
};

// Zero set of the field on a periodic grid x grid lattice (offset by half a cell
// in t so no node lies on the diagonal). The diagonal itself is appended as a
// synthetic (1, 1) loop. On piecewise circular bodies every same-arc pair is an
// equal-tangent pair, so those blocks are excluded together with the band and
// chains ending on them are closed through it. Classes are normalized so the
// first nonzero entry is positive. Throws GeometryError(degenerate) for circles and
// GeometryError(broken_loop) when a loop does not close up on the torus.
std::vector<TorusLoop> trace_torus_curve(const ConvexBody& body, int grid);

bool is_essential(const TorusLoop& loop);
std::vector<TorusLoop> essential_loops(const std::vector<TorusLoop>& loops);

// The diagonal s = t sampled at n points.
TorusLoop diagonal_loop(double period, int n);

// Transversal crossings on the torus. Throws GeometryError(degenerate) when two
// segments overlap.
int count_intersections(const TorusLoop& a, const TorusLoop& b);

// Tangency parameters (left, right) of probes along a closed exterior walk.
TorusLoop walk_to_torus(const ConvexBody& body, const std::vector<Point>& walk, int n_samples);

// Unwrapped copy of a loop's points, starting at the first point.
std::vector<Point> unwrap_loop(const TorusLoop& loop);

}  // namespace equitangent
