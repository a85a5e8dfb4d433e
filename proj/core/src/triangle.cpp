#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "equitangent/loci.hpp"

namespace equitangent {

namespace {

struct Candidate {
  DirectedLine line;
  bool side = false;
};

// Parameter range of the line inside the box, or nullopt if it misses it.
std::optional<std::pair<double, double>> clip(const DirectedLine& l, const Box& box) {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const Point o = l.origin();
  const Vec2 d = l.direction();
  const double lo[2] = {box.lo.x, box.lo.y}, hi[2] = {box.hi.x, box.hi.y};
  const double oc[2] = {o.x, o.y}, dc[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (std::abs(dc[k]) < 1e-15) {
      if (oc[k] < lo[k] || oc[k] > hi[k]) return std::nullopt;
      continue;
    }
    double a = (lo[k] - oc[k]) / dc[k], b = (hi[k] - oc[k]) / dc[k];
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
  }
  if (!(t0 < t1)) return std::nullopt;
  return std::make_pair(t0, t1);
}

class Graph {
 public:
  explicit Graph(double tol) : tol_(tol) {}

  std::size_t node(Point p) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (distance(nodes_[i], p) <= tol_) return i;
    }
    nodes_.push_back(p);
    adj_.emplace_back();
    return nodes_.size() - 1;
  }
  void edge(Point a, Point b) {
    const std::size_t i = node(a), j = node(b);
    if (i == j) return;
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }

  std::vector<std::vector<std::size_t>> components() const {
    std::vector<std::size_t> parent(nodes_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < adj_.size(); ++i) {
      for (std::size_t j : adj_[i]) parent[find(i)] = find(j);
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (adj_[i].empty()) continue;
      const std::size_t r = find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<long>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return groups;
  }

  // Walk over every edge of the component; revisits junctions so consecutive
  // points are always joined by a piece of the locus.
  std::vector<Point> tour(std::size_t start) const {
    std::vector<std::vector<bool>> used(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) used[i].assign(adj_[i].size(), false);
    std::vector<Point> out{nodes_[start]};
    std::size_t last_new = 0;
    auto visit = [&](auto&& self, std::size_t u) -> void {
      for (std::size_t k = 0; k < adj_[u].size(); ++k) {
        if (used[u][k]) continue;
        const std::size_t v = adj_[u][k];
        used[u][k] = true;
        for (std::size_t m = 0; m < adj_[v].size(); ++m) {
          if (adj_[v][m] == u && !used[v][m]) {
            used[v][m] = true;
            break;
          }
        }
        out.push_back(nodes_[v]);
        last_new = out.size();
        self(self, v);
        out.push_back(nodes_[u]);
      }
    };
    visit(visit, start);
    out.resize(last_new);
    return out;
  }

  const std::vector<Point>& nodes() const { return nodes_; }
  std::size_t degree(std::size_t i) const { return adj_[i].size(); }

 private:
  double tol_;
  std::vector<Point> nodes_;
  std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace

std::vector<LocusComponent> triangle_locus_exact(const ConvexPolygon& triangle, std::optional<Box> box) {
  if (triangle.size() != 3) {
    throw GeometryError(ErrorKind::invalid_body, "triangle needs exactly 3 vertices");
  }
  const Diagnostics diag = validate(ConvexBody{triangle});
  if (!diag) throw GeometryError(ErrorKind::degenerate, "degenerate triangle: " + diag.message);
  const ConvexBody body{triangle};
  const Box frame = box ? *box : default_box(body);
  const double scale = triangle.diameter();
  const double tol = Tolerance{scale}.length();

  std::vector<Candidate> lines;
  for (int k = 0; k < 3; ++k) {
    lines.push_back({DirectedLine::through(triangle.vertex(k), triangle.vertex(k + 1)), true});
  }
  for (int k = 0; k < 3; ++k) {
    const Point a = triangle.vertex(k), b = triangle.vertex(k + 1);
    lines.push_back({DirectedLine(a + (b - a) * 0.5, perp(b - a)), false});
  }

  Graph graph(1e3 * tol);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const DirectedLine& l = lines[i].line;
    const auto range = clip(l, frame);
    if (!range) continue;
    std::vector<double> cuts{range->first, range->second};
    auto add_cut = [&](Point p) {
      const double t = dot(p - l.origin(), l.direction());
      if (t > range->first && t < range->second) cuts.push_back(t);
    };
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (j == i) continue;
      if (const auto p = intersect_lines(l, lines[j].line)) add_cut(*p);
    }
    for (int k = 0; k < 3; ++k) {
      const Point a = triangle.vertex(k), b = triangle.vertex(k + 1);
      add_cut(a);
      const Vec2 e = b - a;
      const double denom = cross(l.direction(), e);
      if (std::abs(denom) < 1e-15) continue;
      const double u = cross(l.direction(), l.origin() - a) / denom;
      if (u > 0.0 && u < 1.0) add_cut(a + e * u);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] - cuts[k] <= tol) continue;
      const Point mid = l.at(0.5 * (cuts[k] + cuts[k + 1]));
      if (exterior_distance(body, mid) <= tol) continue;
      bool member = false;
      if (lines[i].side) {
        const SideExtensionProbe p = side_extension_probe(triangle, mid);
        member = p.opposite_length >= p.collinear.min - tol && p.opposite_length <= p.collinear.max + tol;
      } else {
        member = std::abs(equitangent_value(body, mid)) <= 1e-8 * scale;
      }
      if (member) graph.edge(l.at(cuts[k]), l.at(cuts[k + 1]));
    }
  }

  std::vector<LocusComponent> out;
  for (const auto& group : graph.components()) {
    std::vector<std::size_t> ends;
    for (std::size_t n : group) {
      if (graph.degree(n) == 1) ends.push_back(n);
    }
    LocusComponent c;
    c.points = graph.tour(ends.empty() ? group.front() : ends.front());
    if (!ends.empty()) {
      int on_body = 0, at_frame = 0;
      for (std::size_t n : ends) {
        const Point p = graph.nodes()[n];
        if (exterior_distance(body, p) <= 1e3 * tol) ++on_body;
        else if (frame.frame_distance(p) <= 1e3 * tol) ++at_frame;
      }
      if (at_frame == 0) c.kind = LocusKind::boundary_to_boundary;
      else if (on_body == 0) c.kind = LocusKind::infinity_to_infinity;
      else c.kind = LocusKind::boundary_to_infinity;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const LocusComponent& a, const LocusComponent& b) {
    auto key = [](const LocusComponent& c) {
      return *std::min_element(c.points.begin(), c.points.end(), [](Point p, Point q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
      });
    };
    const Point ka = key(a), kb = key(b);
    return ka.x < kb.x || (ka.x == kb.x && ka.y < kb.y);
  });
  return out;
}

}  // namespace equitangent
