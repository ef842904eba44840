#pragma once

#include "tricut/color.hpp"
#include "tricut/rational.hpp"

#include <span>
#include <vector>

namespace tricut {

/// A point on the circle, identified with its parameter t in [0, 1).
struct CirclePoint {
  Rat t;
  Color color;
};

/// Half-open arc [lo, hi) of the unit-parameter circle. 0 <= lo < 1 and
/// lo < hi <= lo + 1; hi > 1 marks an arc wrapping through 0, and
/// hi - lo == 1 is the whole circle.
struct Arc {
  Rat lo;
  Rat hi;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Linear interval [lo, hi) inside [0, 1].
struct Interval {
  Rat lo;
  Rat hi;
};

/// Finite union of disjoint arcs, kept sorted by `lo` and fully merged: no
/// two arcs touch, including across parameter 0.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet whole();
  /// Arcs may be given in any order, overlap, touch, or use unreduced
  /// parameters (lo outside [0,1)); the result is normalized.
  static ArcSet from_arcs(std::span<const Arc> arcs);
  /// Union of linear intervals inside [0, 1].
  static ArcSet from_intervals(std::span<const Interval> pieces);

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool empty() const noexcept { return arcs_.empty(); }
  bool is_whole() const;
  std::size_t component_count() const noexcept { return arcs_.size(); }

  /// The set read on [0, 1): a wrapping arc yields two pieces.
  std::vector<Interval> linear_pieces() const;

  /// Membership of a parameter (reduced mod 1).
  bool contains(const Rat& t) const;
  /// True iff t (mod 1) is an endpoint of some arc.
  bool on_boundary(const Rat& t) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;
  /// Lexicographic on the arc list.
  friend bool operator<(const ArcSet& a, const ArcSet& b);

 private:
  std::vector<Arc> arcs_;
};

ArcSet arcset_complement(const ArcSet& a);
ArcSet arcset_intersection(const ArcSet& a, const ArcSet& b);

/// Throws BoundaryPoint if some parameter sits on an arc endpoint.
ColorCounts arcset_color_counts(const ArcSet& a, std::span<const CirclePoint> points);

inline std::size_t arcset_component_count(const ArcSet& a) { return a.component_count(); }

/// Shifts every parameter by delta (mod 1).
ArcSet rotate(const ArcSet& a, const Rat& delta);
std::vector<CirclePoint> rotate(std::span<const CirclePoint> points, const Rat& delta);

}  // namespace tricut
