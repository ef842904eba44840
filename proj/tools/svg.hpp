#pragma once

#include <tricut/arcset.hpp>
#include <tricut/geometry.hpp>
#include <tricut/lattice.hpp>

#include <span>
#include <string>
#include <vector>

namespace tricut::cli {

/// Minimal SVG 1.1 writer. Exact coordinates are rounded to 6 decimals here
/// and nowhere else; the y axis is flipped so larger y is drawn higher.
class SvgCanvas {
 public:
  SvgCanvas(Point lo, Point hi);

  void polygon(std::span<const Point> pts, const std::string& fill, double opacity);
  void segment(const Point& a, const Point& b, const std::string& stroke, double width);
  void line(const Line& l, const std::string& stroke, double width);
  void dot(const Point& p, const std::string& fill, double radius);
  void path(const std::string& d, const std::string& stroke, double width);
  std::string fmt(double v) const;
  std::string x(const Rat& v) const;
  std::string y(const Rat& v) const;
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  double scale() const { return scale_; }

  std::string str() const;

 private:
  Point lo_, hi_;
  double scale_ = 1;
  std::string body_;
};

std::string color_hex(Color c);

}  // namespace tricut::cli
