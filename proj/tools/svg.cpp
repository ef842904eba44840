#include "svg.hpp"

#include <tricut/arrangement.hpp>

#include <algorithm>
#include <cstdio>

namespace tricut::cli {

std::string color_hex(Color c) {
  switch (c) {
    case Color::Red: return "#d62728";
    case Color::Green: return "#2ca02c";
    case Color::Blue: return "#1f77b4";
    case Color::Black: return "#222222";
  }
  return "#888888";
}

SvgCanvas::SvgCanvas(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  // Target roughly 800 px across the larger side.
  double span = std::max(to_double(hi_.x - lo_.x), to_double(hi_.y - lo_.y));
  scale_ = span > 0 ? 800.0 / span : 1.0;
}

std::string SvgCanvas::fmt(double v) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string SvgCanvas::x(const Rat& v) const { return fmt(to_double(v - lo_.x) * scale_); }
std::string SvgCanvas::y(const Rat& v) const { return fmt(to_double(hi_.y - v) * scale_); }

void SvgCanvas::polygon(std::span<const Point> pts, const std::string& fill, double opacity) {
  if (pts.size() < 3) return;
  body_ += "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) body_ += (i ? " " : "") + x(pts[i].x) + "," + y(pts[i].y);
  body_ += "\" fill=\"" + fill + "\" fill-opacity=\"" + fmt(opacity) + "\" stroke=\"none\"/>\n";
}

void SvgCanvas::segment(const Point& a, const Point& b, const std::string& stroke, double width) {
  body_ += "<line x1=\"" + x(a.x) + "\" y1=\"" + y(a.y) + "\" x2=\"" + x(b.x) + "\" y2=\"" + y(b.y) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

void SvgCanvas::line(const Line& l, const std::string& stroke, double width) {
  // The part of the frame on the nonnegative side has l as one edge.
  LabelledPolygon frame{{lo_, {hi_.x, lo_.y}, hi_, {lo_.x, hi_.y}}, {kBoxEdge, kBoxEdge, kBoxEdge, kBoxEdge}};
  for (int side : {1, -1}) {
    LabelledPolygon half = clip(frame, l, side, 0);
    const std::size_t m = half.vertices.size();
    for (std::size_t i = 0; i < m; ++i)
      if (half.labels[i] == 0) {
        segment(half.vertices[i], half.vertices[(i + 1) % m], stroke, width);
        return;
      }
  }
}

void SvgCanvas::dot(const Point& p, const std::string& fill, double radius) {
  body_ += "<circle cx=\"" + x(p.x) + "\" cy=\"" + y(p.y) + "\" r=\"" + fmt(radius) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::path(const std::string& d, const std::string& stroke, double width) {
  body_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

std::string SvgCanvas::str() const {
  const std::string w = fmt(to_double(hi_.x - lo_.x) * scale_);
  const std::string h = fmt(to_double(hi_.y - lo_.y) * scale_);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_ +
         "</svg>\n";
}

}  // namespace tricut::cli
