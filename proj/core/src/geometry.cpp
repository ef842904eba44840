#include "tricut/geometry.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace tricut {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }
Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

Line make_line(Rat a, Rat b, Rat c) {
  if (a == 0 && b == 0) throw PreconditionViolated("line with a = b = 0");
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{std::move(a), std::move(b), std::move(c)};
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw PreconditionViolated("line through two equal points");
  Rat a = q.y - p.y;
  Rat b = p.x - q.x;
  Rat c = -(a * p.x + b * p.y);
  return make_line(std::move(a), std::move(b), std::move(c));
}

Line line_with_slope(const Rat& slope, const Point& through) {
  // slope*x - y + (y0 - slope*x0) = 0
  return make_line(slope, Rat(-1), Rat(through.y - slope * through.x));
}

bool parallel(const Line& l, const Line& m) { return l.a * m.b - l.b * m.a == 0; }

bool same_line(const Line& l, const Line& m) {
  return parallel(l, m) && l.a * m.c - l.c * m.a == 0 && l.b * m.c - l.c * m.b == 0;
}

std::optional<Point> intersect(const Line& l, const Line& m) {
  Rat det = l.a * m.b - l.b * m.a;
  if (det == 0) return std::nullopt;
  Rat x = (l.b * m.c - m.b * l.c) / det;
  Rat y = (m.a * l.c - l.a * m.c) / det;
  return Point{std::move(x), std::move(y)};
}

Rat slope(const Line& l) {
  if (l.vertical()) throw VerticalLine("slope of a vertical line");
  return -l.a / l.b;
}

int orient(const Point& p, const Point& q, const Point& r) {
  Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

Line dual_point_to_line(const Point& p) {
  // y = a*x - b  <=>  a*x - y - b = 0
  return make_line(p.x, Rat(-1), Rat(-p.y));
}

Point dual_line_to_point(const Line& l) {
  if (l.vertical()) throw VerticalLine("vertical line has no dual point");
  return Point{Rat(-l.a / l.b), Rat(l.c / l.b)};
}

bool check_general_position(std::span<const Point> points, PositionMode mode) {
  const std::size_t n = points.size();
  if (mode == PositionMode::DistinctXY) {
    std::set<Rat> xs, ys;
    for (const auto& p : points) {
      if (!xs.insert(p.x).second || !ys.insert(p.y).second) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(points[i], points[j], points[k]) == 0) return false;
    }
  return true;
}

RationalRotation RationalRotation::from_index(int k) {
  // tan(theta/2) = 1/k
  Rat s = make_rat(1, k);
  Rat d = 1 + s * s;
  return {Rat((1 - s * s) / d), Rat(2 * s / d)};
}

Point RationalRotation::apply(const Point& p) const {
  return {cos * p.x - sin * p.y, sin * p.x + cos * p.y};
}

Point RationalRotation::invert(const Point& p) const {
  return {cos * p.x + sin * p.y, -sin * p.x + cos * p.y};
}

Line RationalRotation::apply(const Line& l) const {
  return make_line(cos * l.a - sin * l.b, sin * l.a + cos * l.b, l.c);
}

Line RationalRotation::invert(const Line& l) const {
  return make_line(cos * l.a + sin * l.b, -sin * l.a + cos * l.b, l.c);
}

std::vector<Point> positions(std::span<const ColoredPoint> points) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.at);
  return out;
}

}  // namespace tricut

namespace tricut {

std::optional<Color> parse_color(std::string_view s) {
  auto eq = [&](std::string_view name) {
    if (s.size() != name.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(s[i])) != name[i]) return false;
    return true;
  };
  if (eq("r") || eq("red")) return Color::Red;
  if (eq("g") || eq("green")) return Color::Green;
  if (eq("b") || eq("blue")) return Color::Blue;
  if (eq("k") || eq("black")) return Color::Black;
  return std::nullopt;
}

}  // namespace tricut
