#include <algorithm>
#include <cmath>
#include <limits>

#include "equitangent/dodecagon.hpp"

namespace equitangent {

std::vector<Point> sample_closed_polyline(const std::vector<Point>& walk, int n) {
  if (walk.size() < 2 || n < 1) {
    throw GeometryError(ErrorKind::invalid_parameters, "walk needs 2+ points and n >= 1");
  }
  std::vector<double> cumulative{0.0};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    cumulative.push_back(cumulative.back() + distance(walk[i], walk[(i + 1) % walk.size()]));
  }
  const double total = cumulative.back();
  if (!(total > 0.0)) throw GeometryError(ErrorKind::degenerate, "walk has zero length");

  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  std::size_t seg = 0;
  for (int k = 0; k < n; ++k) {
    const double s = total * k / n;
    while (seg + 1 < walk.size() && cumulative[seg + 1] <= s) ++seg;
    const double len = cumulative[seg + 1] - cumulative[seg];
    const double f = len > 0.0 ? (s - cumulative[seg]) / len : 0.0;
    const Point a = walk[seg];
    const Point b = walk[(seg + 1) % walk.size()];
    out.push_back(a + (b - a) * f);
  }
  return out;
}

WalkCertificate certify_walk(const ConvexBody& body, const std::vector<Point>& walk,
                             int n_samples) {
  const double tol = Tolerance{length_scale(body)}.length();
  WalkCertificate cert;
  cert.min_defect = std::numeric_limits<double>::infinity();
  cert.max_defect = -std::numeric_limits<double>::infinity();
  cert.min_angle_gap = std::numeric_limits<double>::infinity();
  cert.triangle_ok = true;

  const auto points = sample_closed_polyline(walk, n_samples);
  cert.samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const TangentProbe probe = tangent_probe(body, points[i]);
    WalkSample s{i, points[i], probe.alpha, probe.beta, probe.left.length, probe.right.length};
    cert.min_defect = std::min(cert.min_defect, s.defect());
    cert.max_defect = std::max(cert.max_defect, s.defect());
    cert.min_angle_gap = std::min(cert.min_angle_gap, s.alpha - s.beta);
    if (!(s.alpha + s.beta < kPi)) cert.triangle_ok = false;
    cert.samples.push_back(s);
  }

  // Signs with a dead band; zeros do not break a run and do not count as crossings.
  std::vector<int> signs;
  for (const auto& s : cert.samples) {
    const double d = s.defect();
    if (d > tol) signs.push_back(1);
    else if (d < -tol) signs.push_back(-1);
  }
  cert.degenerate = signs.empty();
  cert.all_same_sign = signs.size() == cert.samples.size() &&
                       (std::all_of(signs.begin(), signs.end(), [](int v) { return v > 0; }) ||
                        std::all_of(signs.begin(), signs.end(), [](int v) { return v < 0; }));
  for (std::size_t i = 0; i < signs.size() && signs.size() > 1; ++i) {
    if (signs[i] != signs[(i + 1) % signs.size()]) ++cert.zero_crossings;
  }
  return cert;
}

}  // namespace equitangent
