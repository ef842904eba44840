#include "tricut/lattice.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tricut {

namespace {

Ray rotate_ray_cw(Ray r, int quarter) {
  static constexpr std::array<Ray, 4> kCycle{Ray::Up, Ray::Right, Ray::Down, Ray::Left};
  int i = 0;
  while (kCycle[static_cast<std::size_t>(i)] != r) ++i;
  return kCycle[static_cast<std::size_t>((i + quarter) % 4)];
}

Point rotate_point_cw(const Point& p, int quarter) {
  switch (quarter % 4) {
    case 1: return {p.y, Rat(-p.x)};
    case 2: return {Rat(-p.x), Rat(-p.y)};
    case 3: return {Rat(-p.y), p.x};
    default: return p;
  }
}

bool opposite(Ray a, Ray b) {
  auto vertical = [](Ray r) { return r == Ray::Up || r == Ray::Down; };
  return a != b && vertical(a) == vertical(b);
}

std::vector<LatticePoint> rotated(std::span<const LatticeColoredPoint> points, int quarter) {
  std::vector<LatticePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(rotate_cw({p.x, p.y}, quarter));
  return out;
}

}  // namespace

std::string_view ray_name(Ray r) {
  switch (r) {
    case Ray::Up: return "up";
    case Ray::Down: return "down";
    case Ray::Left: return "left";
    case Ray::Right: return "right";
  }
  return "?";
}

std::optional<Ray> parse_ray(std::string_view s) {
  for (Ray r : {Ray::Up, Ray::Down, Ray::Left, Ray::Right})
    if (ray_name(r) == s) return r;
  return std::nullopt;
}

bool in_region_one(const LLine& l, const Point& p) {
  Ray a = l.rays[0], b = l.rays[1];
  if (a == b) throw PreconditionViolated("L-line rays must differ");
  const Rat dx = p.x - l.corner.x;
  const Rat dy = p.y - l.corner.y;
  if (opposite(a, b)) {
    if (a == Ray::Up || a == Ray::Down) {
      if (dx == 0) throw PreconditionViolated("point on the L-line");
      return dx < 0;
    }
    if (dy == 0) throw PreconditionViolated("point on the L-line");
    return dy > 0;
  }
  Ray v = (a == Ray::Up || a == Ray::Down) ? a : b;
  Ray h = v == a ? b : a;
  const int sx = h == Ray::Right ? 1 : -1;
  const int sy = v == Ray::Up ? 1 : -1;
  if ((dx == 0 && sgn(dy) * sy >= 0) || (dy == 0 && sgn(dx) * sx >= 0))
    throw PreconditionViolated("point on the L-line");
  const bool in_quadrant = sgn(dx) == sx && sgn(dy) == sy;
  const bool upper_left_in_quadrant = sx < 0 && sy > 0;
  return in_quadrant == upper_left_in_quadrant;
}

std::pair<ColorCounts, ColorCounts> lline_counts(const LLine& l,
                                                 std::span<const LatticeColoredPoint> points) {
  std::pair<ColorCounts, ColorCounts> out;
  for (const auto& p : points) {
    if (p.color == Color::Black) continue;
    Point at{Rat(static_cast<long>(p.x)), Rat(static_cast<long>(p.y))};
    (in_region_one(l, at) ? out.first : out.second)[p.color] += 1;
  }
  return out;
}

std::vector<int> ortho_hull(std::span<const LatticeColoredPoint> points) {
  std::vector<int> hull;
  const auto m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::array<bool, 4> occupied{false, false, false, false};
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::int64_t dx = points[j].x - points[i].x;
      std::int64_t dy = points[j].y - points[i].y;
      if (dx > 0 && dy > 0) occupied[0] = true;
      if (dx < 0 && dy > 0) occupied[1] = true;
      if (dx < 0 && dy < 0) occupied[2] = true;
      if (dx > 0 && dy < 0) occupied[3] = true;
    }
    if (!(occupied[0] && occupied[1] && occupied[2] && occupied[3])) hull.push_back(static_cast<int>(i));
  }
  return hull;
}

LatticePoint rotate_cw(LatticePoint p, int quarter) {
  switch (((quarter % 4) + 4) % 4) {
    case 1: return {p.y, -p.x};
    case 2: return {-p.x, -p.y};
    case 3: return {-p.y, p.x};
    default: return p;
  }
}

SidedOrdering sided_ordering(int anchor, int quarter, std::span<const LatticeColoredPoint> points) {
  if (anchor < 0 || static_cast<std::size_t>(anchor) >= points.size())
    throw PreconditionViolated("anchor index out of range");
  std::vector<LatticePoint> r = rotated(points, quarter);
  const std::int64_t level = r[static_cast<std::size_t>(anchor)].y;
  std::vector<int> above, below;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    (r[static_cast<std::size_t>(i)].y >= level ? above : below).push_back(i);
  std::sort(above.begin(), above.end(), [&](int a, int b) {
    return r[static_cast<std::size_t>(a)].y > r[static_cast<std::size_t>(b)].y;
  });
  std::sort(below.begin(), below.end(), [&](int a, int b) {
    return r[static_cast<std::size_t>(a)].x < r[static_cast<std::size_t>(b)].x;
  });
  SidedOrdering s{anchor, ((quarter % 4) + 4) % 4, above, static_cast<int>(above.size())};
  s.order.insert(s.order.end(), below.begin(), below.end());
  return s;
}

Color role_of(Color c, Color hull) {
  if (c == hull) return Color::Red;
  if (c == Color::Red) return hull;
  return c;
}

LatticePolygon LatticeCurve::closed() const {
  LatticePolygon c{q};
  for (const auto& v : q) c.vertices.push_back(-v);
  return c;
}

LatticeCurve lattice_curve(const SidedOrdering& sigma, std::span<const LatticeColoredPoint> points,
                           Color hull) {
  const int total = static_cast<int>(points.size());
  if (total == 0 || total % 3 != 0) throw PreconditionViolated("need 3n points");
  if (static_cast<int>(sigma.order.size()) != total) throw PreconditionViolated("ordering size mismatch");
  LatticeCurve c;
  c.n = total / 3;
  std::int64_t b = 0, g = 0;
  for (int k = 1; k < total; ++k) {
    Color role = role_of(points[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(k) - 1])].color, hull);
    if (role == Color::Blue) ++b;
    if (role == Color::Green) ++g;
    LatticePoint v{3 * b - k, 3 * g - k};
    c.q.push_back(v);
    if (v == LatticePoint{}) c.zeros.push_back(k);
  }
  return c;
}

std::vector<SidedOrdering> transformation_sequence(std::span<const LatticeColoredPoint> points) {
  const int total = static_cast<int>(points.size());
  std::vector<int> by_y(static_cast<std::size_t>(total)), by_x(static_cast<std::size_t>(total));
  std::iota(by_y.begin(), by_y.end(), 0);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    return points[static_cast<std::size_t>(a)].y < points[static_cast<std::size_t>(b)].y;
  });
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) {
    return points[static_cast<std::size_t>(a)].x < points[static_cast<std::size_t>(b)].x;
  });
  std::vector<SidedOrdering> seq;
  for (int j = total; j >= 1; --j) seq.push_back(sided_ordering(by_y[static_cast<std::size_t>(j) - 1], 2, points));
  for (int j = 1; j <= total; ++j) seq.push_back(sided_ordering(by_x[static_cast<std::size_t>(j) - 1], 3, points));
  seq.push_back(sided_ordering(by_y.front(), 0, points));
  return seq;
}

LLine prefix_lline(const SidedOrdering& sigma, int k, std::span<const LatticeColoredPoint> points) {
  const int total = static_cast<int>(points.size());
  if (k < 1 || k >= total) throw PreconditionViolated("prefix length out of range");
  std::vector<LatticePoint> r = rotated(points, sigma.quarter);
  auto at = [&](int pos) { return r[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(pos)])]; };
  const Rat half(1, 2);

  LLine local;
  if (k <= sigma.block) {
    std::int64_t min_x = std::min_element(r.begin(), r.end(), [](auto a, auto b) { return a.x < b.x; })->x;
    local.corner = {Rat(static_cast<long>(min_x)) - half, Rat(static_cast<long>(at(k - 1).y)) - half};
    local.rays = {Ray::Left, Ray::Right};
  } else {
    std::int64_t level = r[static_cast<std::size_t>(sigma.anchor)].y;
    local.corner = {Rat(static_cast<long>(at(k - 1).x)) + half, Rat(static_cast<long>(level)) - half};
    local.rays = {Ray::Right, Ray::Down};
  }
  const int back = (4 - sigma.quarter) % 4;
  return LLine{rotate_point_cw(local.corner, back),
               {rotate_ray_cw(local.rays[0], back), rotate_ray_cw(local.rays[1], back)}};
}

int validate_lattice_points(std::span<const LatticeColoredPoint> points) {
  if (points.empty() || points.size() % 3 != 0) throw PreconditionViolated("need 3n lattice points");
  ColorCounts c;
  std::set<std::int64_t> xs, ys;
  for (const auto& p : points) {
    if (p.color == Color::Black) throw PreconditionViolated("black lattice points are not supported");
    if (!xs.insert(p.x).second) throw PreconditionViolated("two points share x = " + std::to_string(p.x));
    if (!ys.insert(p.y).second) throw PreconditionViolated("two points share y = " + std::to_string(p.y));
    c[p.color] += 1;
  }
  const int n = static_cast<int>(points.size() / 3);
  if (!c.balanced(n)) throw PreconditionViolated("lattice points are not balanced");
  return n;
}

BalancedLLine find_balanced_lline(std::span<const LatticeColoredPoint> points,
                                  const LLineObserver& observer) {
  const int n = validate_lattice_points(points);
  if (n < 2) throw PreconditionViolated("a nontrivial balanced L-line needs n >= 2");
  std::vector<int> hull = ortho_hull(points);
  const Color hull_color = points[static_cast<std::size_t>(hull.front())].color;
  for (int i : hull)
    if (points[static_cast<std::size_t>(i)].color != hull_color)
      throw PreconditionViolated("orthogonal convex hull is not monochromatic");

  std::vector<SidedOrdering> seq = transformation_sequence(points);
  std::ostringstream trace;
  trace << "{\"curves\":[";
  for (int idx = 0; idx < static_cast<int>(seq.size()); ++idx) {
    const SidedOrdering& sigma = seq[static_cast<std::size_t>(idx)];
    LatticeCurve curve = lattice_curve(sigma, points, hull_color);
    if (observer) observer(idx, sigma, curve);
    trace << (idx ? "," : "") << '[';
    for (std::size_t v = 0; v < curve.q.size(); ++v)
      trace << (v ? "," : "") << '[' << curve.q[v].x << ',' << curve.q[v].y << ']';
    trace << ']';
    if (curve.zeros.empty()) continue;

    BalancedLLine out;
    out.prefix_length = curve.zeros.front();
    out.line = prefix_lline(sigma, out.prefix_length, points);
    auto [one, two] = lline_counts(out.line, points);
    out.k = one.red();
    out.sequence_index = idx;
    out.ordering = sigma;
    if (!one.balanced(out.k) || !two.balanced(n - out.k) || out.k < 1 || out.k > n - 1)
      throw InternalError("prefix L-line is not a nontrivial balanced split", trace.str() + "]}");
    return out;
  }
  trace << "]}";
  throw InternalError("no curve in the transformation sequence reaches the origin", trace.str());
}

}  // namespace tricut
