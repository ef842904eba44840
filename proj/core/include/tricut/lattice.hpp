#pragma once

#include "tricut/color.hpp"
#include "tricut/geometry.hpp"
#include "tricut/winding.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tricut {

struct LatticeColoredPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Color color = Color::Red;
};

enum class Ray { Up, Down, Left, Right };

std::string_view ray_name(Ray r);
std::optional<Ray> parse_ray(std::string_view s);

/// Two distinct axis-parallel rays from a corner off the lattice. Opposite
/// rays give a straight line.
///
/// Region 1 is the side holding (corner.x - M, corner.y + M) for large M:
///
///   rays          region 1
///   up, left      x < cx and y > cy
///   up, right     not (x > cx and y > cy)
///   down, left    not (x < cx and y < cy)
///   down, right   not (x > cx and y < cy)
///   up, down      x < cx
///   left, right   y > cy
struct LLine {
  Point corner;
  std::array<Ray, 2> rays{Ray::Up, Ray::Left};
};

/// Throws PreconditionViolated if p lies on the L-line.
bool in_region_one(const LLine& l, const Point& p);

/// Color counts of region 1 and region 2.
std::pair<ColorCounts, ColorCounts> lline_counts(const LLine& l,
                                                 std::span<const LatticeColoredPoint> points);

/// Indices of points undominated in at least one of the four open
/// quadrants, in input order.
std::vector<int> ortho_hull(std::span<const LatticeColoredPoint> points);

/// Clockwise rotation by quarter * pi/2.
LatticePoint rotate_cw(LatticePoint p, int quarter);

/// In the frame rotated clockwise by quarter * pi/2: the points at or above
/// the anchor from top to bottom, then the rest from left to right.
struct SidedOrdering {
  int anchor = 0;
  int quarter = 0;
  std::vector<int> order;
  int block = 0;  // size of the at-or-above part
};

SidedOrdering sided_ordering(int anchor, int quarter, std::span<const LatticeColoredPoint> points);

/// Prefix curve q_k = (3 b_k - k, 3 g_k - k), k = 1 .. 3n-1, with `hull`
/// playing red and the two other colors taking blue and green in order.
struct LatticeCurve {
  int n = 0;
  std::vector<LatticePoint> q;  // q[k-1] = q_k
  std::vector<int> zeros;       // prefix lengths k with q_k == (0,0)

  /// (q_1..q_{3n-1}, -q_1..-q_{3n-1}).
  LatticePolygon closed() const;
};

LatticeCurve lattice_curve(const SidedOrdering& sigma, std::span<const LatticeColoredPoint> points,
                           Color hull = Color::Red);

/// Red/blue/green role of each color once `hull` plays red.
Color role_of(Color c, Color hull);

/// The orderings sigma_{y_j, pi} for j = 3n..1, sigma_{x_j, 3pi/2} for
/// j = 1..3n, then sigma_{y_1, 0}; y_j / x_j is the j-th point by y / x.
std::vector<SidedOrdering> transformation_sequence(std::span<const LatticeColoredPoint> points);

/// L-line separating the first k points of sigma from the rest.
LLine prefix_lline(const SidedOrdering& sigma, int k, std::span<const LatticeColoredPoint> points);

struct BalancedLLine {
  LLine line;
  int k = 0;  // points of each color in region 1
  int sequence_index = 0;
  int prefix_length = 0;
  SidedOrdering ordering;
};

using LLineObserver = std::function<void(int index, const SidedOrdering&, const LatticeCurve&)>;

/// Nontrivial balanced L-line for 3n lattice points (n >= 2) with distinct
/// coordinates and a monochromatic orthogonal convex hull.
BalancedLLine find_balanced_lline(std::span<const LatticeColoredPoint> points,
                                  const LLineObserver& observer = {});

/// Checks balance, distinct x and y, primary colors only. Returns n.
int validate_lattice_points(std::span<const LatticeColoredPoint> points);

}  // namespace tricut
