#pragma once

#include <tricut/generate.hpp>
#include <tricut/triangulation.hpp>
#include <tricut/winding.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace support {

// Boundary of the d-simplex on vertices 0..d, refined by random stellar
// subdivisions of facets, vertices colored uniformly in {0..d}.
inline tricut::ColoredTriangulation random_sphere(int d, int subdivisions, tricut::Rng& rng) {
  tricut::ColoredTriangulation t;
  t.d = d;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> facet;
    for (int v = 0; v <= d; ++v)
      if (v != skip) facet.push_back(v);
    t.simplices.push_back(facet);
  }
  int next = d + 1;
  for (int s = 0; s < subdivisions; ++s) {
    auto pick = static_cast<std::size_t>(rng.below(t.simplices.size()));
    std::vector<int> facet = t.simplices[pick];
    t.simplices.erase(t.simplices.begin() + static_cast<std::ptrdiff_t>(pick));
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      std::vector<int> f = facet;
      f[drop] = next;
      std::sort(f.begin(), f.end());
      t.simplices.push_back(f);
    }
    ++next;
  }
  for (int v = 0; v < next; ++v) t.colors[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
  return t;
}

// Winding by summing quadrant transitions; independent of the library's
// crossing rule. Assumes the curve avoids the origin.
inline int quadrant_winding(const std::vector<tricut::LatticePoint>& v) {
  auto quadrant = [](tricut::LatticePoint p) {
    if (p.x > 0 && p.y >= 0) return 0;
    if (p.x <= 0 && p.y > 0) return 1;
    if (p.x < 0 && p.y <= 0) return 2;
    return 3;
  };
  int quarter_turns = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto a = v[i], b = v[(i + 1) % v.size()];
    int qa = quadrant(a), qb = quadrant(b);
    int delta = (qb - qa + 4) % 4;
    if (delta == 3) delta = -1;
    if (delta == 2) {
      // Diagonal jump: the side of the origin decides the direction.
      long double cross = static_cast<long double>(a.x) * b.y - static_cast<long double>(a.y) * b.x;
      delta = cross > 0 ? 2 : -2;
    }
    quarter_turns += delta;
  }
  return quarter_turns / 4;
}

// True if some lattice point lies strictly inside the closed polygon.
inline bool has_interior_lattice_point(const tricut::LatticePolygon& poly) {
  std::int64_t lx = poly.vertices[0].x, hx = lx, ly = poly.vertices[0].y, hy = ly;
  for (auto p : poly.vertices) {
    lx = std::min(lx, p.x);
    hx = std::max(hx, p.x);
    ly = std::min(ly, p.y);
    hy = std::max(hy, p.y);
  }
  for (std::int64_t x = lx; x <= hx; ++x)
    for (std::int64_t y = ly; y <= hy; ++y) {
      bool on_boundary = false;
      for (std::size_t i = 0; i < poly.vertices.size(); ++i)
        on_boundary = on_boundary ||
                      tricut::segment_contains(poly.vertices[i], poly.vertices[(i + 1) % poly.vertices.size()], {x, y});
      if (on_boundary) continue;
      if (tricut::winding_number_around(poly, {x, y}) != 0) return true;
    }
  return false;
}

}  // namespace support
