#pragma once

#include "tricut/color.hpp"
#include "tricut/geometry.hpp"
#include "tricut/winding.hpp"

#include <functional>
#include <span>
#include <vector>

namespace tricut {

/// Two distinct lines through `apex` plus a choice of opposite sector pair.
/// Pair1 holds the points where line1 and line2 evaluate with opposite
/// signs, Pair2 those where they agree.
struct DoubleWedge {
  enum class Sector { Pair1, Pair2 };
  Point apex;
  Line line1;
  Line line2;
  Sector sector = Sector::Pair1;
};

/// Throws OnBoundary when p lies on a boundary line.
bool wedge_contains(const DoubleWedge& w, const Point& p);
ColorCounts wedge_counts(const DoubleWedge& w, std::span<const ColoredPoint> points);

/// Input indices sorted by the slope of the line from the apex.
struct SlopeOrdering {
  Point apex;
  std::vector<int> order;
};

/// Throws DegenerateApex if the apex shares an x-coordinate with an input
/// point or is collinear with two of them.
SlopeOrdering ordering_at(const Point& apex, std::span<const ColoredPoint> points);

/// Double wedge with apex `apex` whose content is the circular window
/// order[start], ..., order[start + length - 1] of the slope ordering.
/// Boundary slopes sit at midpoints between consecutive slopes.
DoubleWedge wedge_for_window(const SlopeOrdering& sigma, std::span<const ColoredPoint> points,
                             int start, int length);

/// Window-balance curve of a slope ordering of 6n points: vertex k is
/// (blue - n, green - n) over the 3n points starting at position k.
struct WedgeCurve {
  int n = 0;
  std::vector<LatticePoint> q;  // 6n vertices; q[k + 3n] == -q[k]
  std::vector<int> zeros;       // positions k with q[k] == (0,0)

  /// q_1..q_6n as a closed loop. Its winding is odd when origin-free.
  LatticePolygon loop() const;
  /// (q_1..q_6n, -q_1..-q_6n). Vertex i+6n is -vertex i, but the two joins
  /// are not unit steps; step and winding checks belong on loop().
  LatticePolygon closed() const;
};

WedgeCurve wedge_curve(const SlopeOrdering& sigma, std::span<const ColoredPoint> points);

/// True iff consecutive vertices differ by one of the seven window steps
/// (0,0), (+-1,0), (0,+-1), (1,-1), (-1,1).
bool is_window_step(LatticePoint d);

/// State handed to a sweep observer: once for the initial ordering
/// (event == -1) and after every transposition.
struct SweepStep {
  int event = -1;
  int swapped_position = -1;  // positions p and p+1 were exchanged
  const std::vector<int>* order = nullptr;
  const std::vector<LatticePoint>* q = nullptr;
  const std::vector<LatticePoint>* previous_q = nullptr;
};
using SweepObserver = std::function<void(const SweepStep&)>;

struct BalancedWedge {
  DoubleWedge wedge;
  SlopeOrdering ordering;
  int window_start = 0;
  int events_processed = 0;
  int event_count = 0;
  ColorCounts counts;
};

/// Vertical-line sweep for a double wedge with exactly n points of each
/// color among 6n points (2n per color). Throws PreconditionViolated on
/// collinear triples or shared coordinates, InternalError (with an event
/// trace) if the sweep ends without a balanced window.
BalancedWedge sweep_balanced_wedge(std::span<const ColoredPoint> points,
                                   const SweepObserver& observer = {});

struct Wedge111 {
  DoubleWedge wedge;
  /// Dual lines the cell finder ran on (after any rotation of the input)
  /// and the (1,1,1) segment among them.
  std::vector<ColoredLine> dual_lines;
  Segment dual_segment;
  RationalRotation rotation = RationalRotation::identity();
};

/// Double wedge containing exactly one point of each color, by dualizing
/// to a line arrangement and extracting a (1,1,1) segment.
Wedge111 find_111_wedge(std::span<const ColoredPoint> points);

struct HalvingSegment {
  Segment segment;
  /// The balanced wedge among the dual points (in the rotated frame).
  BalancedWedge dual_wedge;
  std::vector<ColoredPoint> dual_points;
  RationalRotation rotation = RationalRotation::identity();
};

/// Segment crossing exactly n lines of each color among 6n lines.
HalvingSegment halving_segment(std::span<const ColoredLine> lines);

/// The double wedge dual to the segment pq: it contains exactly the points
/// whose dual lines separate p and q. Needs p.x != q.x.
DoubleWedge wedge_from_dual_segment(const Segment& s);

/// Image of a wedge under the inverse of `r`, sector preserved.
DoubleWedge invert_wedge(const DoubleWedge& w, const RationalRotation& r);

/// Segment whose endpoints are the duals of the wedge's boundary lines.
Segment dual_segment_of(const DoubleWedge& w);

}  // namespace tricut
