#include "equitangent/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace equitangent {

namespace {

constexpr long kNone = -1;

class Tracer {
 public:
  Tracer(const NodeGrid& grid, const ContourOptions& options)
      : g_(grid), opt_(options), partners_(2 * static_cast<std::size_t>(grid.nx) * grid.ny),
        crossing_(partners_.size()), has_crossing_(partners_.size(), false),
        blocked_(partners_.size(), false) {
    for (auto& p : partners_) p = {kNone, kNone};
  }

  std::vector<ContourPolyline> run() {
    const int cells_x = opt_.periodic ? g_.nx : g_.nx - 1;
    const int cells_y = opt_.periodic ? g_.ny : g_.ny - 1;
    for (int j = 0; j < cells_y; ++j) {
      for (int i = 0; i < cells_x; ++i) march_cell(i, j);
    }
    return assemble();
  }

 private:
  int wrap_x(int i) const { return opt_.periodic ? (i % g_.nx + g_.nx) % g_.nx : i; }
  int wrap_y(int j) const { return opt_.periodic ? (j % g_.ny + g_.ny) % g_.ny : j; }
  double value(int i, int j) const { return g_.value(wrap_x(i), wrap_y(j)); }

  long h_edge(int i, int j) const {
    return 2 * (static_cast<long>(wrap_y(j)) * g_.nx + wrap_x(i));
  }
  long v_edge(int i, int j) const { return h_edge(i, j) + 1; }

  static bool positive(double v) { return v >= 0.0; }

  void link(long a, long b) {
    for (long from : {a, b}) {
      const long to = from == a ? b : a;
      auto& slot = partners_[static_cast<std::size_t>(from)];
      if (slot[0] == kNone) slot[0] = to;
      else slot[1] = to;
    }
  }

  // Zero crossing between nodes p and q (unwrapped positions) with values fp,
  // fq; nullopt when the edge runs through a masked region.
  std::optional<Point> refine(Point p, Point q, double fp, double fq) const {
    double lo = 0.0, hi = 1.0;
    const bool lo_positive = positive(fp);
    if (opt_.evaluate) {
      while (hi - lo > opt_.refine_fraction) {
        const double mid = 0.5 * (lo + hi);
        const double fm = opt_.evaluate(p + (q - p) * mid);
        if (std::isnan(fm)) return std::nullopt;
        if (positive(fm) == lo_positive) lo = mid;
        else hi = mid;
      }
      return p + (q - p) * (0.5 * (lo + hi));
    }
    const double t = fp / (fp - fq);
    return p + (q - p) * std::clamp(t, 0.0, 1.0);
  }

  bool record(long edge, Point p, Point q, double fp, double fq) {
    const auto e = static_cast<std::size_t>(edge);
    if (!has_crossing_[e]) {
      const auto at = refine(p, q, fp, fq);
      has_crossing_[e] = true;
      blocked_[e] = !at;
      if (at) crossing_[e] = *at;
    }
    return !blocked_[e];
  }

  void march_cell(int i, int j) {
    const std::array<double, 4> f{value(i, j), value(i + 1, j), value(i + 1, j + 1),
                                  value(i, j + 1)};
    for (double v : f) {
      if (std::isnan(v)) return;
    }
    const std::array<Point, 4> p{g_.node(i, j), g_.node(i + 1, j), g_.node(i + 1, j + 1),
                                 g_.node(i, j + 1)};
    // Edge k joins corner k and corner k+1: bottom, right, top, left.
    const std::array<long, 4> edge{h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
    std::array<bool, 4> cut{};
    int cuts = 0;
    bool open = true;
    for (int k = 0; k < 4; ++k) {
      const int n = (k + 1) % 4;
      cut[k] = positive(f[k]) != positive(f[n]);
      if (!cut[k]) continue;
      ++cuts;
      // Orient every edge from its lower node so both cells refine identically.
      const bool forward = k < 2;
      open &= forward ? record(edge[k], p[k], p[n], f[k], f[n])
                      : record(edge[k], p[n], p[k], f[n], f[k]);
    }
    if (!open) return;
    if (cuts == 2) {
      long a = kNone, b = kNone;
      for (int k = 0; k < 4; ++k) {
        if (!cut[k]) continue;
        if (a == kNone) a = edge[k];
        else b = edge[k];
      }
      link(a, b);
    } else if (cuts == 4) {
      const Point center = p[0] + (p[2] - p[0]) * 0.5;
      double fc = opt_.evaluate ? opt_.evaluate(center) : std::nan("");
      if (std::isnan(fc)) fc = 0.25 * (f[0] + f[1] + f[2] + f[3]);
      if (positive(fc) == positive(f[0])) {
        // Corners 0 and 2 are joined through the center; cut off corners 1 and 3.
        link(edge[0], edge[1]);
        link(edge[2], edge[3]);
      } else {
        link(edge[3], edge[0]);
        link(edge[1], edge[2]);
      }
    }
  }

  Point unwrap_near(Point q, Point ref) const {
    if (!opt_.periodic) return q;
    const double px = g_.dx * g_.nx, py = g_.dy * g_.ny;
    q.x -= px * std::round((q.x - ref.x) / px);
    q.y -= py * std::round((q.y - ref.y) / py);
    return q;
  }

  ContourPolyline walk(long start, std::vector<bool>& visited) const {
    ContourPolyline line;
    long cur = start;
    while (cur != kNone) {
      visited[static_cast<std::size_t>(cur)] = true;
      const Point q = crossing_[static_cast<std::size_t>(cur)];
      line.points.push_back(line.points.empty() ? q : unwrap_near(q, line.points.back()));
      long step = kNone;
      for (long n : partners_[static_cast<std::size_t>(cur)]) {
        if (n != kNone && !visited[static_cast<std::size_t>(n)]) {
          step = n;
          break;
        }
      }
      cur = step;
    }
    return line;
  }

  std::vector<ContourPolyline> assemble() const {
    std::vector<bool> visited(partners_.size(), false);
    std::vector<ContourPolyline> out;
    for (std::size_t e = 0; e < partners_.size(); ++e) {
      const auto& p = partners_[e];
      if (p[0] != kNone && p[1] == kNone && !visited[e]) {
        out.push_back(walk(static_cast<long>(e), visited));
      }
    }
    for (std::size_t e = 0; e < partners_.size(); ++e) {
      const auto& p = partners_[e];
      if (p[0] != kNone && p[1] != kNone && !visited[e]) {
        ContourPolyline loop = walk(static_cast<long>(e), visited);
        loop.closed = true;
        out.push_back(std::move(loop));
      }
    }
    return out;
  }

  const NodeGrid& g_;
  const ContourOptions& opt_;
  std::vector<std::array<long, 2>> partners_;
  std::vector<Point> crossing_;
  std::vector<bool> has_crossing_;
  std::vector<bool> blocked_;
};

}  // namespace

std::vector<ContourPolyline> trace_zero_set(const NodeGrid& grid, const ContourOptions& options) {
  if (grid.nx < 2 || grid.ny < 2 ||
      grid.values.size() != static_cast<std::size_t>(grid.nx) * grid.ny) {
    throw GeometryError(ErrorKind::invalid_parameters, "grid needs at least 2x2 nodes");
  }
  return Tracer(grid, options).run();
}

NodeGrid sample_grid(Point lo, double dx, double dy, int nx, int ny, const PointEvaluator& evaluate) {
  NodeGrid g{lo, dx, dy, nx, ny, {}};
  g.values.resize(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) g.values[static_cast<std::size_t>(j) * nx + i] = evaluate(g.node(i, j));
  }
  return g;
}

}  // namespace equitangent
