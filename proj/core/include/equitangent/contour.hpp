#pragma once

// Marching-squares zero-set extraction on node grids.
//
// Node values >= 0 count as positive, so exact zeros never create extra
// crossings. NaN nodes are masked: every cell touching one is skipped, as is
// every cell with a crossing edge whose refinement meets a NaN. Saddle
// cells are resolved by the sign of the field at the cell center. Crossings on
// cell edges are refined by bisection when a point evaluator is supplied.

#include <functional>
#include <vector>

#include "equitangent/geom.hpp"

namespace equitangent {

// Nodes at lo + (i * dx, j * dy) for 0 <= i < nx, 0 <= j < ny; values row-major
// (index j * nx + i).
struct NodeGrid {
  Point lo{};
  double dx = 1.0;
  double dy = 1.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;

  Point node(int i, int j) const { return {lo.x + i * dx, lo.y + j * dy}; }
  double value(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

struct ContourPolyline {
  std::vector<Point> points;
  bool closed = false;
};

using PointEvaluator = std::function<double(Point)>;

struct ContourOptions {
  // Wrap both axes with periods nx * dx and ny * dy. Points of periodic
  // polylines are unwrapped: consecutive points never jump by a period.
  bool periodic = false;
  // Edge crossings are bisected until the bracket is below this fraction of
  // the edge length; without an evaluator they are linearly interpolated.
  double refine_fraction = 1e-10;
  PointEvaluator evaluate;
};

// Open polylines come first (ordered by their first crossing edge), then
// closed ones. Each closed polyline lists its points once, without repeating
// the first point at the end.
std::vector<ContourPolyline> trace_zero_set(const NodeGrid& grid, const ContourOptions& options);

// Samples `evaluate` at every node.
NodeGrid sample_grid(Point lo, double dx, double dy, int nx, int ny, const PointEvaluator& evaluate);

}  // namespace equitangent
