#include <doctest.h>

#include "support.hpp"

#include <tricut/errors.hpp>
#include <tricut/generate.hpp>
#include <tricut/oracles.hpp>
#include <tricut/wedge.hpp>

#include <algorithm>

using namespace tricut;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<ColoredPoint> balanced_points(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_points({{2 * n, 2 * n, 2 * n}}, rng);
}

bool slope_less(const Point& apex, const Point& a, const Point& b) {
  // Cross-multiplied slope comparison, denominators made positive.
  Rat da = a.x - apex.x, db = b.x - apex.x;
  Rat na = a.y - apex.y, nb = b.y - apex.y;
  if (da < 0) { da = -da; na = -na; }
  if (db < 0) { db = -db; nb = -nb; }
  return na * db < nb * da;
}

}  // namespace

TEST_CASE("wedge membership") {
  DoubleWedge w{pt(0, 0), line_through(pt(0, 0), pt(1, 1)), line_through(pt(0, 0), pt(1, -1)),
                DoubleWedge::Sector::Pair2};
  CHECK(wedge_contains(w, pt(2, 0)));
  CHECK_FALSE(wedge_contains(w, pt(0, 2)));
  CHECK(wedge_contains(w, pt(-3, 1)));
  CHECK_THROWS_AS(wedge_contains(w, pt(1, 1)), OnBoundary);
}

TEST_CASE("orderings from far below and far above") {
  auto pts = balanced_points(1, 4);
  Point below{make_rat(7, 2), Rat(-100000)};
  Point above{make_rat(7, 2), Rat(100000)};
  auto lo = ordering_at(below, pts).order;
  auto hi = ordering_at(above, pts).order;
  std::vector<int> expected;
  std::vector<int> left, right;
  for (int i = 0; i < 6; ++i) (pts[static_cast<std::size_t>(i)].at.x < make_rat(7, 2) ? left : right).push_back(i);
  auto by_x_desc = [&](int a, int b) { return pts[static_cast<std::size_t>(a)].at.x > pts[static_cast<std::size_t>(b)].at.x; };
  std::sort(left.begin(), left.end(), by_x_desc);
  std::sort(right.begin(), right.end(), by_x_desc);
  expected = left;
  expected.insert(expected.end(), right.begin(), right.end());
  CHECK(lo == expected);
  std::reverse(expected.begin(), expected.end());
  CHECK(hi == expected);
}

TEST_CASE("ordering agrees with pairwise slope comparison") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_points({{1, 1, 1}}, rng);
    Point apex{make_rat(2 * rng.between(-50, 50) + 1, 2), make_rat(rng.between(-99, 99), 7)};
    SlopeOrdering s;
    try {
      s = ordering_at(apex, pts);
    } catch (const DegenerateApex&) {
      continue;
    }
    for (std::size_t i = 0; i + 1 < s.order.size(); ++i)
      CHECK(slope_less(apex, pts[static_cast<std::size_t>(s.order[i])].at, pts[static_cast<std::size_t>(s.order[i + 1])].at));
  }
  std::vector<ColoredPoint> pts{{pt(1, 1), Color::Red}, {pt(2, 2), Color::Green}};
  CHECK_THROWS_AS(ordering_at(pt(0, 0), pts), DegenerateApex);
  CHECK_THROWS_AS(ordering_at(pt(1, 0), pts), DegenerateApex);
}

TEST_CASE("window curve of a toy ordering") {
  std::vector<ColoredPoint> pts;
  const std::array<Color, 6> colors{Color::Red, Color::Green, Color::Blue, Color::Red, Color::Green, Color::Blue};
  for (int i = 0; i < 6; ++i) pts.push_back({{Rat(i + 1), Rat(i * i)}, colors[static_cast<std::size_t>(i)]});
  SlopeOrdering s{pt(0, -1000), {0, 1, 2, 3, 4, 5}};
  WedgeCurve c = wedge_curve(s, pts);
  CHECK(c.zeros == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (const auto& q : c.q) CHECK(q == LatticePoint{0, 0});
}

TEST_CASE("window curve invariants over random orderings") {
  Rng rng(13);
  int odd_checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    std::vector<ColoredPoint> pts;
    for (Color c : kPrimaryColors)
      for (int i = 0; i < 2 * n; ++i) pts.push_back({pt(static_cast<long>(pts.size()), 0), c});
    SlopeOrdering s{pt(-1, 0), std::vector<int>(pts.size())};
    for (std::size_t i = 0; i < pts.size(); ++i) s.order[i] = static_cast<int>(i);
    rng.shuffle(s.order);
    WedgeCurve c = wedge_curve(s, pts);
    LatticePolygon closed = c.closed();
    const std::size_t m = c.q.size();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(closed.vertices[i + m] == -closed.vertices[i]);
      CHECK(c.q[(i + m / 2) % m] == -c.q[i]);
      CHECK(is_window_step(c.q[(i + 1) % m] - c.q[i]));
    }
    CHECK(closed.vertices.size() == 2 * m);
    if (c.zeros.empty()) {
      CHECK(edges_are_primitive(c.loop()));
      CHECK(winding_number(c.loop()) % 2 != 0);
      CHECK(support::quadrant_winding(c.q) == winding_number(c.loop()));
      ++odd_checked;
    }
  }
  CHECK(odd_checked > 20);
}

TEST_CASE("sweep finds a balanced wedge") {
  for (int n : {1, 2, 3}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto pts = balanced_points(n, 100 + seed);
      BalancedWedge w = sweep_balanced_wedge(pts);
      CHECK(w.counts.balanced(n));
      CHECK(wedge_counts(w.wedge, pts).balanced(n));
      auto oracle = brute_oracle_wedges(pts, n);
      CHECK(std::binary_search(oracle.begin(), oracle.end(), wedge_mask(w.wedge, pts)));
    }
  }
}

TEST_CASE("sweep on convex position") {
  Rng rng(1);
  auto pts = convex_points(2, rng);
  BalancedWedge w = sweep_balanced_wedge(pts);
  CHECK(wedge_counts(w.wedge, pts).balanced(1));
}

TEST_CASE("sweep preconditions") {
  auto pts = balanced_points(1, 3);
  auto shared = pts;
  shared[1].at.x = shared[0].at.x;
  CHECK_THROWS_AS(sweep_balanced_wedge(shared), PreconditionViolated);
  auto unbalanced = pts;
  unbalanced[0].color = unbalanced[0].color == Color::Red ? Color::Green : Color::Red;
  CHECK_THROWS_AS(sweep_balanced_wedge(unbalanced), PreconditionViolated);
  std::vector<ColoredPoint> collinear{{pt(0, 0), Color::Red},   {pt(1, 1), Color::Red},   {pt(2, 2), Color::Green},
                                      {pt(3, 7), Color::Green}, {pt(4, -5), Color::Blue}, {pt(5, 11), Color::Blue}};
  CHECK_THROWS_AS(sweep_balanced_wedge(collinear), PreconditionViolated);
}

TEST_CASE("every sweep event is one adjacent swap over lattice-free cells") {
  auto pts = balanced_points(2, 77);
  int events = 0;
  sweep_balanced_wedge(pts, [&](const SweepStep& s) {
    const auto& q = *s.q;
    const auto& prev = *s.previous_q;
    const std::size_t m = q.size();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(q[(i + m / 2) % m] == -q[i]);
      CHECK(is_window_step(q[(i + 1) % m] - q[i]));
    }
    if (s.event < 0) return;
    ++events;
    std::vector<std::size_t> changed;
    for (std::size_t i = 0; i < m; ++i)
      if (q[i] != prev[i]) changed.push_back(i);
    CHECK(changed.size() <= 2);
    for (std::size_t i : changed) {
      LatticePolygon cell{{prev[(i + m - 1) % m], prev[i], prev[(i + 1) % m], q[i]}};
      CHECK_FALSE(support::has_interior_lattice_point(cell));
    }
  });
  CHECK(events >= 0);
}

TEST_CASE("wedge through duality") {
  std::vector<ColoredPoint> three{{pt(0, 0), Color::Red}, {pt(4, 1), Color::Green}, {pt(1, 5), Color::Blue}};
  Wedge111 w = find_111_wedge(three);
  CHECK(wedge_counts(w.wedge, three).balanced(1));

  Rng rng(5);
  auto convex = convex_points(3, rng);
  for (int i = 0; i < 5; ++i) {
    Wedge111 c = find_111_wedge(convex);
    CHECK(wedge_counts(c.wedge, convex).balanced(1));
    CHECK(count_segment_crossings(c.dual_segment, c.dual_lines).colors.balanced(1));
    auto oracle = brute_oracle_wedges(convex, 1);
    CHECK(std::binary_search(oracle.begin(), oracle.end(), wedge_mask(c.wedge, convex)));
    convex = convex_points(3, rng);
  }

  std::vector<ColoredPoint> collinear{{pt(0, 0), Color::Red}, {pt(1, 1), Color::Green}, {pt(2, 2), Color::Blue}};
  CHECK_THROWS_AS(find_111_wedge(collinear), PreconditionViolated);
  std::vector<ColoredPoint> vertical{{pt(0, 0), Color::Red}, {pt(0, 3), Color::Green}, {pt(2, 1), Color::Blue},
                                     {pt(2, 7), Color::Red}};
  Wedge111 v = find_111_wedge(vertical);
  CHECK(wedge_counts(v.wedge, vertical).balanced(1));
}

TEST_CASE("halving segments") {
  Rng rng(42);
  for (int n : {1, 2}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto lines = random_simple_lines({{2 * n, 2 * n, 2 * n}}, rng);
      HalvingSegment h = halving_segment(lines);
      CHECK(count_segment_crossings(h.segment, lines).colors.balanced(n));
      CHECK(wedge_counts(h.dual_wedge.wedge, h.dual_points) == count_segment_crossings(h.segment, lines).colors);
    }
  }
  std::vector<ColoredLine> parallel;
  for (int i = 0; i < 6; ++i)
    parallel.push_back({line_with_slope(Rat(i == 1 ? 0 : i), pt(0, i)), kPrimaryColors[static_cast<std::size_t>(i / 2)]});
  CHECK_THROWS_AS(halving_segment(parallel), NotSimple);
}

TEST_CASE("trivial windows give well-formed wedges") {
  auto pts = balanced_points(1, 9);
  SlopeOrdering s = ordering_at(pt(-1000, 3), pts);
  CHECK(wedge_counts(wedge_for_window(s, pts, 2, 0), pts).total() == 0);
  CHECK(wedge_counts(wedge_for_window(s, pts, 4, 6), pts).total() == 6);
  for (int start = 0; start < 6; ++start)
    for (int len = 0; len <= 6; ++len) CHECK(wedge_counts(wedge_for_window(s, pts, start, len), pts).total() == len);
  auto oracle = brute_oracle_wedges(pts, 0);
  CHECK(std::binary_search(oracle.begin(), oracle.end(), std::uint64_t{0}));
}
