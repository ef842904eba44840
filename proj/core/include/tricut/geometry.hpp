#pragma once

#include "tricut/color.hpp"
#include "tricut/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tricut {

struct Point {
  Rat x;
  Rat y;
  friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& a);
Point midpoint(const Point& a, const Point& b);

struct ColoredPoint {
  Point at;
  Color color;
};

/// The line a*x + b*y + c = 0. Construct through `make_line`, which rejects
/// (a, b) = (0, 0) and flips signs so the first nonzero of (a, b) is positive.
struct Line {
  Rat a;
  Rat b;
  Rat c;

  Rat eval(const Point& p) const { return a * p.x + b * p.y + c; }
  int side(const Point& p) const { return sgn(eval(p)); }
  bool vertical() const { return b == 0; }
};

Line make_line(Rat a, Rat b, Rat c);
Line line_through(const Point& p, const Point& q);
/// y = slope * x + intercept.
Line line_with_slope(const Rat& slope, const Point& through);

bool parallel(const Line& l, const Line& m);
bool same_line(const Line& l, const Line& m);
std::optional<Point> intersect(const Line& l, const Line& m);
/// Slope of a non-vertical line.
Rat slope(const Line& l);

struct ColoredLine {
  Line line;
  Color color;
};

struct Segment {
  Point p;
  Point q;
};

/// Sign of det(q - p, r - p); +1 for a counterclockwise turn.
int orient(const Point& p, const Point& q, const Point& r);

/// p = (a, b) maps to the line y = a*x - b.
Line dual_point_to_line(const Point& p);
/// Inverse of `dual_point_to_line`; throws VerticalLine.
Point dual_line_to_point(const Line& l);

enum class PositionMode { NoThreeCollinear, DistinctXY };

bool check_general_position(std::span<const Point> points, PositionMode mode);

/// Rotation by the angle whose half-angle tangent is 1/k; cos and sin are
/// rational, so rotating exact data stays exact.
struct RationalRotation {
  Rat cos;
  Rat sin;

  static RationalRotation identity() { return {Rat(1), Rat(0)}; }
  static RationalRotation from_index(int k);

  Point apply(const Point& p) const;
  Point invert(const Point& p) const;
  /// The image of `l` under the rotation (a line through the rotated points).
  Line apply(const Line& l) const;
  Line invert(const Line& l) const;
  RationalRotation inverse() const { return {cos, -sin}; }
};

std::vector<Point> positions(std::span<const ColoredPoint> points);

}  // namespace tricut
