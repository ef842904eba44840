#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tricut {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
inline LatticePoint operator-(LatticePoint a) { return {-a.x, -a.y}; }

/// Closed polygon on Z^2; the edge from the last vertex back to the first is
/// implicit.
struct LatticePolygon {
  std::vector<LatticePoint> vertices;
};

/// Net counterclockwise turns around the origin, by signed crossings of the
/// positive x-axis. Throws OriginOnCurve if a vertex or edge hits the origin.
int winding_number(const LatticePolygon& c);

/// Winding of `c` around an arbitrary lattice point.
int winding_number_around(const LatticePolygon& c, LatticePoint z);

/// True iff the closed segment [a, b] contains z.
bool segment_contains(LatticePoint a, LatticePoint b, LatticePoint z);

/// True iff no edge has an interior lattice point (gcd of |dx|, |dy| <= 1).
bool edges_are_primitive(const LatticePolygon& c);

LatticePolygon reversed(const LatticePolygon& c);

}  // namespace tricut
