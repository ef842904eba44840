#include "tricut/oracles.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace tricut {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

void require_small(std::size_t count, std::size_t limit, const char* what) {
  if (count > limit) throw PreconditionViolated(std::string(what) + ": instance too large for the oracle");
}

std::array<std::uint64_t, 3> color_masks_of(std::span<const Color> colors) {
  std::array<std::uint64_t, 3> m{0, 0, 0};
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] != Color::Black) m[static_cast<std::size_t>(index(colors[i]))] |= bit(i);
  return m;
}

bool balanced_mask(std::uint64_t mask, const std::array<std::uint64_t, 3>& colors, int k) {
  for (auto c : colors)
    if (std::popcount(mask & c) != k) return false;
  return true;
}

}  // namespace

std::vector<int> scan_all_complete_faces(const Arrangement& arr) {
  std::vector<int> out;
  for (const auto& f : arr.faces()) {
    if (!f.bounded) continue;
    std::vector<Color> cyc;
    for (int id : f.edge_lines) cyc.push_back(arr.lines()[static_cast<std::size_t>(id)].color);
    int rg = 0, rb = 0, gb = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Color a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto is = [&](Color x, Color y) { return (a == x && b == y) || (a == y && b == x); };
      rg += is(Color::Red, Color::Green);
      rb += is(Color::Red, Color::Blue);
      gb += is(Color::Green, Color::Blue);
    }
    if (rg % 2 == 1 && rb % 2 == 1 && gb % 2 == 1) out.push_back(f.id);
  }
  return out;
}

std::vector<int> scan_faces_with_colors(const Arrangement& arr, std::span<const Color> colors) {
  std::vector<int> out;
  for (const auto& f : arr.faces()) {
    std::set<Color> seen;
    for (int id : f.edge_lines)
      if (id != kBoxEdge) seen.insert(arr.lines()[static_cast<std::size_t>(id)].color);
    if (std::all_of(colors.begin(), colors.end(), [&](Color c) { return seen.count(c) > 0; }))
      out.push_back(f.id);
  }
  return out;
}

std::vector<std::vector<std::int8_t>> enumerate_face_signs(std::span<const ColoredLine> lines) {
  const std::size_t m = lines.size();
  std::set<std::vector<std::int8_t>> faces;
  if (m == 0) return {{}};
  if (m == 1) return {{-1}, {1}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto v = intersect(lines[i].line, lines[j].line);
      if (!v) throw NotSimple("parallel lines in the face oracle");
      std::vector<std::int8_t> s(m, 0);
      for (std::size_t l = 0; l < m; ++l) {
        if (l == i || l == j) continue;
        int side = lines[l].line.side(*v);
        if (side == 0) throw NotSimple("three lines through one point in the face oracle");
        s[l] = static_cast<std::int8_t>(side);
      }
      for (int a : {-1, 1})
        for (int b : {-1, 1}) {
          s[i] = static_cast<std::int8_t>(a);
          s[j] = static_cast<std::int8_t>(b);
          faces.insert(s);
        }
    }
  return {faces.begin(), faces.end()};
}

CrossingCounts count_segment_crossings(const Segment& s, std::span<const ColoredLine> lines) {
  CrossingCounts out;
  for (const auto& cl : lines) {
    const Line& l = cl.line;
    Point a, b;
    if (l.b != 0) {
      a = {Rat(0), Rat(-l.c / l.b)};
      b = {Rat(1), Rat((-l.c - l.a) / l.b)};
    } else {
      a = {Rat(-l.c / l.a), Rat(0)};
      b = {Rat(-l.c / l.a), Rat(1)};
    }
    int op = orient(a, b, s.p);
    int oq = orient(a, b, s.q);
    if (op == 0 || oq == 0) throw EndpointOnLine("segment endpoint lies on a line");
    if (op == oq) continue;
    if (cl.color == Color::Black) ++out.black;
    else out.colors[cl.color] += 1;
  }
  return out;
}

std::uint64_t arcset_mask(const ArcSet& a, std::span<const CirclePoint> points) {
  require_small(points.size(), 63, "arcset_mask");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rat& t = points[i].t;
    Rat t1 = t + 1;
    for (const auto& arc : a.arcs())
      if ((arc.lo <= t && t < arc.hi) || (arc.lo <= t1 && t1 < arc.hi)) mask |= bit(i);
  }
  return mask;
}

int cyclic_runs(std::uint64_t mask, std::span<const CirclePoint> points) {
  const std::size_t n = points.size();
  if (n == 0 || mask == 0) return 0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].t < points[b].t; });
  int runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool here = mask & bit(order[i]);
    bool before = mask & bit(order[(i + n - 1) % n]);
    if (here && !before) ++runs;
  }
  return runs == 0 ? 1 : runs;
}

std::vector<std::uint64_t> enumerate_2arc_sets(std::span<const CirclePoint> points, int k) {
  const std::size_t n = points.size();
  require_small(n, 63, "enumerate_2arc_sets");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].t < points[b].t; });
  std::vector<Color> colors;
  for (const auto& p : points) colors.push_back(p.color);
  const auto cmask = color_masks_of(colors);

  // All circular intervals of points, as input-index masks.
  std::vector<std::uint64_t> intervals{0};
  for (std::size_t s = 0; s < n; ++s) {
    std::uint64_t m = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      m |= bit(order[(s + len - 1) % n]);
      intervals.push_back(m);
    }
  }
  std::sort(intervals.begin(), intervals.end());
  intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());

  std::set<std::uint64_t> found;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i; j < intervals.size(); ++j) {
      std::uint64_t m = intervals[i] | intervals[j];
      if (balanced_mask(m, cmask, k)) found.insert(m);
    }
  return {found.begin(), found.end()};
}

std::uint64_t wedge_mask(const DoubleWedge& w, std::span<const ColoredPoint> points) {
  require_small(points.size(), 63, "wedge_mask");
  Point d1{w.line1.b, Rat(-w.line1.a)};
  Point d2{w.line2.b, Rat(-w.line2.a)};
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int o1 = orient(w.apex, w.apex + d1, points[i].at);
    int o2 = orient(w.apex, w.apex + d2, points[i].at);
    if (o1 == 0 || o2 == 0) throw OnBoundary("point on a wedge boundary line");
    bool differ = o1 != o2;
    if (differ == (w.sector == DoubleWedge::Sector::Pair1)) mask |= bit(i);
  }
  return mask;
}

std::vector<std::uint64_t> brute_oracle_wedges(std::span<const ColoredPoint> points, int k) {
  const std::size_t n = points.size();
  require_small(n, 24, "brute_oracle_wedges");
  std::vector<Point> at = positions(points);
  for (int r = 2;; ++r) {
    std::set<Rat> xs;
    bool distinct = true;
    for (const auto& p : at) distinct = distinct && xs.insert(p.x).second;
    if (distinct) break;
    auto rot = RationalRotation::from_index(r);
    for (std::size_t i = 0; i < n; ++i) at[i] = rot.apply(points[i].at);
  }
  std::vector<ColoredLine> duals;
  std::vector<Color> colors;
  for (std::size_t i = 0; i < n; ++i) {
    duals.push_back({dual_point_to_line(at[i]), points[i].color});
    colors.push_back(points[i].color);
  }
  const auto cmask = color_masks_of(colors);
  std::vector<std::uint64_t> faces;
  for (const auto& s : enumerate_face_signs(duals)) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > 0) m |= bit(i);
    faces.push_back(m);
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  std::set<std::uint64_t> found;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i; j < faces.size(); ++j) {
      std::uint64_t m = faces[i] ^ faces[j];
      if (balanced_mask(m, cmask, k)) found.insert(m);
      if (balanced_mask(full ^ m, cmask, k)) found.insert(full ^ m);
    }
  return {found.begin(), found.end()};
}

namespace {

std::int64_t doubled(const Rat& v) {
  Rat d = v * 2;
  if (d.get_den() != 1 || !d.get_num().fits_slong_p())
    throw PreconditionViolated("L-line corner is not on the half-integer grid");
  std::int64_t out = d.get_num().get_si();
  if (out % 2 == 0) throw PreconditionViolated("L-line corner lies on a lattice line");
  return out;
}

bool region_one(Ray a, Ray b, std::int64_t x, std::int64_t y, std::int64_t cx, std::int64_t cy) {
  auto has = [&](Ray r) { return a == r || b == r; };
  if (has(Ray::Up) && has(Ray::Down)) return x < cx;
  if (has(Ray::Left) && has(Ray::Right)) return y > cy;
  if (has(Ray::Up) && has(Ray::Left)) return x < cx && y > cy;
  if (has(Ray::Up) && has(Ray::Right)) return !(x > cx && y > cy);
  if (has(Ray::Down) && has(Ray::Left)) return !(x < cx && y < cy);
  return !(x > cx && y < cy);
}

constexpr std::array<std::array<Ray, 2>, 6> kRayPairs{{{Ray::Up, Ray::Left},
                                                       {Ray::Up, Ray::Right},
                                                       {Ray::Down, Ray::Left},
                                                       {Ray::Down, Ray::Right},
                                                       {Ray::Up, Ray::Down},
                                                       {Ray::Left, Ray::Right}}};

}  // namespace

std::uint64_t lline_mask(const LLine& l, std::span<const LatticeColoredPoint> points) {
  require_small(points.size(), 63, "lline_mask");
  if (l.rays[0] == l.rays[1]) throw PreconditionViolated("L-line rays must differ");
  const std::int64_t cx = doubled(l.corner.x);
  const std::int64_t cy = doubled(l.corner.y);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (region_one(l.rays[0], l.rays[1], 2 * points[i].x, 2 * points[i].y, cx, cy)) mask |= bit(i);
  return mask;
}

std::uint64_t partition_key(std::uint64_t mask, std::size_t point_count) {
  const std::uint64_t full = point_count >= 64 ? ~std::uint64_t{0} : bit(point_count) - 1;
  return std::min(mask & full, full ^ (mask & full));
}

std::vector<OracleLLine> brute_oracle_llines(std::span<const LatticeColoredPoint> points) {
  const std::size_t total = points.size();
  require_small(total, 30, "brute_oracle_llines");
  std::vector<OracleLLine> out;
  if (total == 0 || total % 3 != 0) return out;
  const int n = static_cast<int>(total / 3);
  std::vector<Color> colors;
  std::vector<std::int64_t> xs, ys;
  for (const auto& p : points) {
    colors.push_back(p.color);
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const auto cmask = color_masks_of(colors);
  auto grid = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<std::int64_t> g{2 * v.front() - 1};
    for (auto c : v) g.push_back(2 * c + 1);
    return g;
  };
  const auto gx = grid(xs);
  const auto gy = grid(ys);
  for (auto cx : gx)
    for (auto cy : gy)
      for (const auto& rays : kRayPairs) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < total; ++i)
          if (region_one(rays[0], rays[1], 2 * points[i].x, 2 * points[i].y, cx, cy)) mask |= bit(i);
        const int k = std::popcount(mask & cmask[0]);
        if (k < 1 || k > n - 1 || !balanced_mask(mask, cmask, k)) continue;
        LLine l{{Rat(cx, 2), Rat(cy, 2)}, rays};
        out.push_back({l, k, mask});
      }
  return out;
}

std::vector<int> balanced_halfplane_splits(std::span<const ColoredPoint> points) {
  const std::size_t total = points.size();
  require_small(total, 63, "balanced_halfplane_splits");
  std::vector<Color> colors;
  for (const auto& p : points) colors.push_back(p.color);
  const auto cmask = color_masks_of(colors);
  const int n = std::popcount(cmask[0]);
  const std::uint64_t full = bit(total) - 1;
  std::set<int> ks;
  auto consider = [&](std::uint64_t m) {
    for (int k = 1; k < n; ++k)
      if (balanced_mask(m, cmask, k)) ks.insert(k);
  };
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) {
      std::uint64_t left = 0;
      for (std::size_t l = 0; l < total; ++l)
        if (orient(points[i].at, points[j].at, points[l].at) > 0) left |= bit(l);
      for (std::uint64_t extra : {std::uint64_t{0}, bit(i), bit(j), bit(i) | bit(j)}) {
        consider(left | extra);
        consider(full ^ (left | extra));
      }
    }
  return {ks.begin(), ks.end()};
}

int minimum_ortho_hull_size(int count) {
  if (count <= 0) return 0;
  std::vector<int> perm(static_cast<std::size_t>(count));
  std::iota(perm.begin(), perm.end(), 0);
  int best = count;
  do {
    int hull = 0;
    for (int i = 0; i < count; ++i) {
      bool ne = false, nw = false, sw = false, se = false;
      for (int j = 0; j < count; ++j) {
        int dx = j - i, dy = perm[static_cast<std::size_t>(j)] - perm[static_cast<std::size_t>(i)];
        ne = ne || (dx > 0 && dy > 0);
        nw = nw || (dx < 0 && dy > 0);
        sw = sw || (dx < 0 && dy < 0);
        se = se || (dx > 0 && dy < 0);
      }
      if (!(ne && nw && sw && se)) ++hull;
    }
    best = std::min(best, hull);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<int> bfs_plan_lengths(int n) {
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
  std::deque<int> queue{n};
  dist[static_cast<std::size_t>(n)] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : {x / 2, n - x}) {
      if (dist[static_cast<std::size_t>(y)] >= 0) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace tricut
