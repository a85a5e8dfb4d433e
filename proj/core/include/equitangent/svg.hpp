#pragma once

// Minimal SVG 1.1 writer for figures in the plane (y axis up) or on the
// parameter torus.

#include <string>
#include <vector>

#include "equitangent/geom.hpp"

namespace equitangent {

class SvgFigure {
 public:
  // World rectangle shown, mapped to a width_px square-ish canvas.
  SvgFigure(Point lo, Point hi, double width_px = 800.0);

  void path(const std::vector<Point>& points, bool closed, const std::string& stroke,
            double stroke_width = 1.5, const std::string& fill = "none", const std::string& id = "");
  // One path element made of several open subpaths.
  void path(const std::vector<std::vector<Point>>& pieces, const std::string& stroke,
            double stroke_width = 1.5, const std::string& id = "");
  // Emitted as <polygon> so paths stay one per traced component.
  void outline(const std::vector<Point>& points, const std::string& stroke, const std::string& fill = "none");
  void dot(Point p, double radius_px, const std::string& fill);
  void label(Point p, const std::string& text, double size_px = 12.0);

  // Bounding box of points, padded by `margin` of its larger side.
  static std::pair<Point, Point> bounds(const std::vector<std::vector<Point>>& groups, double margin);

  std::string str() const;

 private:
  Point to_canvas(Point p) const;

  Point lo_;
  Point hi_;
  double width_px_;
  double height_px_;
  double scale_;
  std::vector<std::string> elements_;
};

}  // namespace equitangent
