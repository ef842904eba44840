#include "tricut/winding.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tricut {

namespace {

__extension__ typedef __int128 Wide;

Wide cross(LatticePoint a, LatticePoint b) {
  return static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
}

}  // namespace

bool segment_contains(LatticePoint a, LatticePoint b, LatticePoint z) {
  if (cross(b - a, z - a) != 0) return false;
  return std::min(a.x, b.x) <= z.x && z.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= z.y &&
         z.y <= std::max(a.y, b.y);
}

int winding_number_around(const LatticePolygon& c, LatticePoint z) {
  const auto& v = c.vertices;
  const std::size_t m = v.size();
  int w = 0;
  for (std::size_t i = 0; i < m; ++i) {
    LatticePoint u = v[i] - z;
    LatticePoint t = v[(i + 1) % m] - z;
    if (segment_contains(u, t, {0, 0}))
      throw OriginOnCurve("curve passes through (" + std::to_string(z.x) + "," +
                          std::to_string(z.y) + ") at edge " + std::to_string(i));
    if (u.y <= 0) {
      if (t.y > 0 && cross(u, t) > 0) ++w;
    } else {
      if (t.y <= 0 && cross(u, t) < 0) --w;
    }
  }
  return w;
}

int winding_number(const LatticePolygon& c) { return winding_number_around(c, {0, 0}); }

bool edges_are_primitive(const LatticePolygon& c) {
  const auto& v = c.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    LatticePoint d = v[(i + 1) % v.size()] - v[i];
    if (std::gcd(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y) > 1) return false;
  }
  return true;
}

LatticePolygon reversed(const LatticePolygon& c) {
  return LatticePolygon{{c.vertices.rbegin(), c.vertices.rend()}};
}

}  // namespace tricut
