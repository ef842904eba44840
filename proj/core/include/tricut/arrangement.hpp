#pragma once

#include "tricut/color.hpp"
#include "tricut/geometry.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace tricut {

/// Label used in face polygons for edges on the clipping box.
inline constexpr int kBoxEdge = -1;

struct ArrangementVertex {
  Point at;
  int line_a;
  int line_b;
};

/// A face of the arrangement, clipped to the arrangement's bounding box.
/// Bounded faces lie strictly inside the box, so their polygon is exact.
struct Face {
  int id = -1;
  bool bounded = false;
  /// Counterclockwise polygon; `edge_lines[i]` labels the edge from
  /// polygon[i] to polygon[i+1] with a line id or kBoxEdge.
  std::vector<Point> polygon;
  std::vector<int> edge_lines;
  /// Side of the face relative to every line (+1/-1).
  std::vector<std::int8_t> signs;

  /// Bounding line ids in counterclockwise order. For unbounded faces the
  /// chain starts right after the box edges.
  std::vector<int> boundary() const;
  Point interior_point() const;
};

/// Colors of the bounding lines of a bounded face, in traversal order.
struct DualCycle {
  std::vector<Color> colors;
};

/// Edge-type tallies of a dual cycle: n_rr, n_gg, n_bb, n_rg, n_rb, n_gb.
struct EdgeTypeCounts {
  int rr = 0, gg = 0, bb = 0, rg = 0, rb = 0, gb = 0;
  int total() const { return rr + gg + bb + rg + rb + gb; }
};

EdgeTypeCounts edge_type_counts(const DualCycle& c);

/// (n_rg mod 2, n_rb mod 2, n_gb mod 2).
std::array<int, 3> cycle_parity(const DualCycle& c);
bool is_complete(const DualCycle& c);

/// Simple arrangement of colored lines with its full face list.
class Arrangement {
 public:
  const std::vector<ColoredLine>& lines() const noexcept { return lines_; }
  const std::vector<ArrangementVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  /// Corners of the clipping box (lo, hi).
  const Point& box_lo() const noexcept { return box_lo_; }
  const Point& box_hi() const noexcept { return box_hi_; }

  std::size_t bounded_face_count() const;
  /// Edges counted on the one-point compactification.
  std::size_t edge_count() const;

  /// Id of the face containing p; throws OnBoundary if p lies on a line.
  int locate(const Point& p) const;
  int face_with_signs(const std::vector<std::int8_t>& signs) const;

  DualCycle dual_cycle(const Face& f) const;

  friend Arrangement build_arrangement(std::span<const ColoredLine> lines);

 private:
  std::vector<ColoredLine> lines_;
  std::vector<ArrangementVertex> vertices_;
  std::vector<Face> faces_;
  std::map<std::vector<std::int8_t>, int> by_signs_;
  Point box_lo_;
  Point box_hi_;
};

/// Throws NotSimple naming a parallel pair or a triple point.
void validate_simple(std::span<const ColoredLine> lines);

Arrangement build_arrangement(std::span<const ColoredLine> lines);

/// Throws UnboundedFace for unbounded faces.
bool is_complete(const Arrangement& arr, const Face& f);

/// Convex polygon with labelled edges; the working representation of the
/// incremental face tracker and of face clipping.
struct LabelledPolygon {
  std::vector<Point> vertices;
  std::vector<int> labels;  // labels[i]: edge vertices[i] -> vertices[i+1]
};

/// Part of `poly` where side * l.eval(.) >= 0, the new edge labelled
/// `label`. Returns an empty polygon if that part has no interior.
LabelledPolygon clip(const LabelledPolygon& poly, const Line& l, int side, int label);

}  // namespace tricut
