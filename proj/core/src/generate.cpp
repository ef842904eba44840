#include "tricut/generate.hpp"

#include "tricut/arrangement.hpp"
#include "tricut/cell_finder.hpp"
#include "tricut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tricut {

namespace {

constexpr int kRetryBudget = 1000;

constexpr std::array<std::pair<GenKind, std::string_view>, 8> kKindNames{{
    {GenKind::SimpleLines3C, "SimpleLines3C"},
    {GenKind::SimpleLines4CShielded, "SimpleLines4CShielded"},
    {GenKind::Points3C, "Points3C"},
    {GenKind::Points3CConvex, "Points3CConvex"},
    {GenKind::CirclePoints3C, "CirclePoints3C"},
    {GenKind::LatticeRedHull, "LatticeRedHull"},
    {GenKind::LatticeDiagonalCounterexample, "LatticeDiagonalCounterexample"},
    {GenKind::ThreeDiskTriangle, "ThreeDiskTriangle"},
}};

std::vector<Color> color_list(const ColorCounts& counts) {
  std::vector<Color> out;
  for (Color c : kPrimaryColors)
    for (int i = 0; i < counts[c]; ++i) out.push_back(c);
  return out;
}

Rat integer(std::int64_t v) { return make_rat(v); }

bool collinear_with_any(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orient(pts[i], pts[j], p) == 0) return true;
  return false;
}

}  // namespace

std::string_view kind_name(GenKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<GenKind> parse_kind(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

std::vector<ColoredLine> random_simple_lines(const ColorCounts& counts, Rng& rng) {
  std::vector<Color> colors = color_list(counts);
  const std::int64_t r = 10 + 2 * static_cast<std::int64_t>(colors.size());
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<ColoredLine> lines;
    for (Color c : colors) {
      Point p{integer(rng.between(-r, r)), integer(rng.between(-r, r))};
      Point q = p;
      while (q == p) q = {integer(rng.between(-r, r)), integer(rng.between(-r, r))};
      lines.push_back({line_through(p, q), c});
    }
    try {
      validate_simple(lines);
      return lines;
    } catch (const NotSimple&) {
    }
  }
  throw GenerationFailed("no simple arrangement within the retry budget");
}

std::vector<ColoredPoint> random_points(const ColorCounts& counts, Rng& rng) {
  std::vector<Color> colors = color_list(counts);
  rng.shuffle(colors);
  const std::int64_t r = 10 * static_cast<std::int64_t>(colors.size()) + 10;
  std::vector<Point> pts;
  std::set<Rat> xs, ys;
  int budget = kRetryBudget * static_cast<int>(colors.size() + 1);
  while (pts.size() < colors.size()) {
    if (--budget < 0) throw GenerationFailed("could not place points in general position");
    Point p{integer(rng.between(-r, r)), integer(rng.between(-r, r))};
    if (xs.count(p.x) || ys.count(p.y) || collinear_with_any(pts, p)) continue;
    xs.insert(p.x);
    ys.insert(p.y);
    pts.push_back(p);
  }
  std::vector<ColoredPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back({pts[i], colors[i]});
  return out;
}

std::vector<ColoredPoint> convex_points(int n, Rng& rng) {
  std::vector<Color> colors = color_list({{n, n, n}});
  rng.shuffle(colors);
  std::vector<std::int64_t> xs(static_cast<std::size_t>(30 * n));
  std::iota(xs.begin(), xs.end(), 1);
  rng.shuffle(xs);
  xs.resize(colors.size());
  std::sort(xs.begin(), xs.end());
  std::vector<ColoredPoint> out;
  for (std::size_t i = 0; i < colors.size(); ++i) out.push_back({{integer(xs[i]), integer(xs[i] * xs[i])}, colors[i]});
  return out;
}

std::vector<CirclePoint> random_circle_points(int n, Rng& rng) {
  std::vector<Color> colors = color_list({{n, n, n}});
  rng.shuffle(colors);
  const std::int64_t den = 1000 * static_cast<std::int64_t>(colors.size());
  std::set<std::int64_t> used;
  std::vector<CirclePoint> out;
  for (Color c : colors) {
    std::int64_t num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den)));
    while (used.count(num)) num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den)));
    used.insert(num);
    out.push_back({make_rat(num, den), c});
  }
  std::sort(out.begin(), out.end(), [](const CirclePoint& a, const CirclePoint& b) { return a.t < b.t; });
  return out;
}

std::vector<LatticeColoredPoint> lattice_red_hull(int n, Rng& rng) {
  if (n < 4) throw GenerationFailed("a red orthogonal hull needs at least 4 points per color");
  // Four red points in a pinwheel dominate every point of the box [1, m]^2.
  const std::int64_t m = 3 * static_cast<std::int64_t>(n) - 4;
  std::vector<LatticeColoredPoint> pts{{m + 1, m + 2, Color::Red},
                                       {-1, m + 1, Color::Red},
                                       {m + 2, 0, Color::Red},
                                       {0, -1, Color::Red}};
  std::vector<Color> inner = color_list({{n - 4, n, n}});
  rng.shuffle(inner);
  std::vector<std::int64_t> xs(static_cast<std::size_t>(m)), ys(static_cast<std::size_t>(m));
  std::iota(xs.begin(), xs.end(), 1);
  std::iota(ys.begin(), ys.end(), 1);
  rng.shuffle(xs);
  rng.shuffle(ys);
  for (std::size_t i = 0; i < inner.size(); ++i) pts.push_back({xs[i], ys[i], inner[i]});

  const int quarter = static_cast<int>(rng.below(4));
  const bool mirror = rng.below(2) == 1;
  const std::int64_t dx = rng.between(-50, 50);
  const std::int64_t dy = rng.between(-50, 50);
  for (auto& p : pts) {
    LatticePoint q = rotate_cw({mirror ? -p.x : p.x, p.y}, quarter);
    p.x = q.x + dx;
    p.y = q.y + dy;
  }
  rng.shuffle(pts);

  validate_lattice_points(pts);
  for (int i : ortho_hull(pts))
    if (pts[static_cast<std::size_t>(i)].color != Color::Red)
      throw GenerationFailed("generated lattice set has a non-red hull point");
  return pts;
}

std::vector<LatticeColoredPoint> lattice_diagonal(int n) {
  std::vector<LatticeColoredPoint> pts;
  for (int i = 0; i < 3 * n; ++i) pts.push_back({i + 1, i + 1, kPrimaryColors[static_cast<std::size_t>(i / n)]});
  return pts;
}

std::vector<ColoredPoint> three_disk_triangle(int n, Rng& rng) {
  const std::array<std::array<std::int64_t, 2>, 3> centers{{{0, 0}, {1000, 0}, {500, 866}}};
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<ColoredPoint> out;
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<std::int64_t> offsets(static_cast<std::size_t>(4 * n));
      std::iota(offsets.begin(), offsets.end(), 1);
      rng.shuffle(offsets);
      for (int i = 0; i < n; ++i) {
        std::int64_t j = offsets[static_cast<std::size_t>(i)];
        // Points on a tiny parabola arc around the center.
        out.push_back({{make_rat(centers[c][0] * 100 + j, 100), make_rat(centers[c][1] * 10000 + j * j, 10000)},
                       kPrimaryColors[c]});
      }
    }
    std::vector<Point> at = positions(out);
    if (check_general_position(at, PositionMode::NoThreeCollinear) &&
        check_general_position(at, PositionMode::DistinctXY))
      return out;
  }
  throw GenerationFailed("three-disk instance not in general position");
}

Instance generate(const GenSpec& spec) {
  if (spec.n < 0) throw GenerationFailed("n must be nonnegative");
  Rng rng(spec.seed);
  const int n = spec.n;
  switch (spec.kind) {
    case GenKind::SimpleLines3C:
      if (n < 1) throw GenerationFailed("need at least one line per color");
      return random_simple_lines({{n, n, n}}, rng);
    case GenKind::SimpleLines4CShielded:
      return gen_shielded_counterexample();
    case GenKind::Points3C:
      if (n < 1) throw GenerationFailed("need at least one point per color");
      return random_points({{n, n, n}}, rng);
    case GenKind::Points3CConvex:
      if (n < 1) throw GenerationFailed("need at least one point per color");
      return convex_points(n, rng);
    case GenKind::CirclePoints3C:
      if (n < 1) throw GenerationFailed("need at least one point per color");
      return random_circle_points(n, rng);
    case GenKind::LatticeRedHull:
      return lattice_red_hull(n, rng);
    case GenKind::LatticeDiagonalCounterexample:
      if (n < 1) throw GenerationFailed("need at least one point per color");
      return lattice_diagonal(n);
    case GenKind::ThreeDiskTriangle:
      if (n < 1) throw GenerationFailed("need at least one point per color");
      return three_disk_triangle(n, rng);
  }
  throw GenerationFailed("unknown instance kind");
}

}  // namespace tricut
