#include "equitangent/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace equitangent {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgFigure::SvgFigure(Point lo, Point hi, double width_px)
    : lo_(lo), hi_(hi), width_px_(width_px) {
  const double w = std::max(hi.x - lo.x, 1e-12);
  const double h = std::max(hi.y - lo.y, 1e-12);
  scale_ = width_px / w;
  height_px_ = h * scale_;
}

Point SvgFigure::to_canvas(Point p) const {
  return {(p.x - lo_.x) * scale_, (hi_.y - p.y) * scale_};
}

void SvgFigure::path(const std::vector<Point>& points, bool closed, const std::string& stroke,
                     double stroke_width, const std::string& fill, const std::string& id) {
  if (points.empty()) return;
  std::string d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point c = to_canvas(points[i]);
    d += (i == 0 ? "M" : " L") + num(c.x) + "," + num(c.y);
  }
  if (closed) d += " Z";
  std::string el = "<path";
  if (!id.empty()) el += " id=\"" + escape(id) + "\"";
  el += " d=\"" + d + "\" fill=\"" + escape(fill) + "\" stroke=\"" + escape(stroke) +
        "\" stroke-width=\"" + num(stroke_width) + "\"/>";
  elements_.push_back(std::move(el));
}

void SvgFigure::path(const std::vector<std::vector<Point>>& pieces, const std::string& stroke,
                     double stroke_width, const std::string& id) {
  std::string d;
  for (const auto& piece : pieces) {
    for (std::size_t i = 0; i < piece.size(); ++i) {
      const Point c = to_canvas(piece[i]);
      if (!d.empty()) d += ' ';
      d += (i == 0 ? "M" : "L") + num(c.x) + "," + num(c.y);
    }
  }
  if (d.empty()) return;
  std::string el = "<path";
  if (!id.empty()) el += " id=\"" + escape(id) + "\"";
  el += " d=\"" + d + "\" fill=\"none\" stroke=\"" + escape(stroke) + "\" stroke-width=\"" +
        num(stroke_width) + "\"/>";
  elements_.push_back(std::move(el));
}

void SvgFigure::outline(const std::vector<Point>& points, const std::string& stroke, const std::string& fill) {
  if (points.empty()) return;
  std::string pts;
  for (const Point& p : points) {
    const Point c = to_canvas(p);
    if (!pts.empty()) pts += ' ';
    pts += num(c.x) + "," + num(c.y);
  }
  elements_.push_back("<polygon points=\"" + pts + "\" fill=\"" + escape(fill) + "\" stroke=\"" +
                      escape(stroke) + "\" stroke-width=\"1.000\"/>");
}

void SvgFigure::dot(Point p, double radius_px, const std::string& fill) {
  const Point c = to_canvas(p);
  elements_.push_back("<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(radius_px) +
                      "\" fill=\"" + escape(fill) + "\"/>");
}

void SvgFigure::label(Point p, const std::string& text, double size_px) {
  const Point c = to_canvas(p);
  elements_.push_back("<text x=\"" + num(c.x) + "\" y=\"" + num(c.y) + "\" font-size=\"" +
                      num(size_px) + "\" font-family=\"sans-serif\">" + escape(text) + "</text>");
}

std::pair<Point, Point> SvgFigure::bounds(const std::vector<std::vector<Point>>& groups, double margin) {
  Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point hi{-lo.x, -lo.y};
  for (const auto& g : groups) {
    for (const Point& p : g) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  }
  if (!(lo.x <= hi.x)) return {{-1.0, -1.0}, {1.0, 1.0}};
  const double pad = margin * std::max({hi.x - lo.x, hi.y - lo.y, 1e-9});
  return {{lo.x - pad, lo.y - pad}, {hi.x + pad, hi.y + pad}};
}

std::string SvgFigure::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width_px_) +
         "\" height=\"" + num(height_px_) + "\" viewBox=\"0 0 " + num(width_px_) + " " +
         num(height_px_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : elements_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace equitangent
