#include <doctest.h>

#include <tricut/arrangement.hpp>
#include <tricut/cell_finder.hpp>
#include <tricut/errors.hpp>
#include <tricut/generate.hpp>
#include <tricut/oracles.hpp>

#include <algorithm>
#include <bit>

using namespace tricut;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<ColoredLine> rgb_triangle() {
  return {{line_through(pt(0, 0), pt(1, 0)), Color::Red},
          {line_through(pt(0, 0), pt(0, 1)), Color::Green},
          {line_through(pt(1, 0), pt(0, 1)), Color::Blue}};
}

}  // namespace

TEST_CASE("complete-face scan") {
  Arrangement tri = build_arrangement(rgb_triangle());
  auto faces = scan_all_complete_faces(tri);
  REQUIRE(faces.size() == 1);
  CHECK(tri.faces()[static_cast<std::size_t>(faces.front())].bounded);

  Arrangement shielded = build_arrangement(gen_shielded_counterexample());
  std::vector<Color> colors;
  for (const auto& l : shielded.lines()) colors.push_back(l.color);
  CHECK(scan_faces_with_colors(shielded, colors).empty());

  Rng rng(6);
  for (int i = 0; i < 10; ++i) CHECK_FALSE(scan_all_complete_faces(build_arrangement(random_simple_lines({{2, 2, 2}}, rng))).empty());
}

TEST_CASE("face sign enumeration matches the arrangement") {
  Rng rng(10);
  for (int m = 3; m <= 7; ++m) {
    auto lines = random_simple_lines({{m, 0, 0}}, rng);
    auto signs = enumerate_face_signs(lines);
    CHECK(signs.size() == static_cast<std::size_t>(1 + m + m * (m - 1) / 2));
    Arrangement arr = build_arrangement(lines);
    for (const auto& f : arr.faces())
      CHECK(std::find(signs.begin(), signs.end(), f.signs) != signs.end());
  }
}

TEST_CASE("segment crossings") {
  auto lines = rgb_triangle();
  Segment inside{{make_rat(1, 10), make_rat(1, 10)}, {make_rat(1, 5), make_rat(1, 5)}};
  CHECK(count_segment_crossings(inside, lines).colors.total() == 0);
  Segment across{{make_rat(-1, 2), make_rat(1, 4)}, {Rat(2), make_rat(1, 4)}};
  auto c = count_segment_crossings(across, lines);
  CHECK(c.colors[Color::Green] == 1);
  CHECK(c.colors[Color::Blue] == 1);
  CHECK(c.colors[Color::Red] == 0);
  Segment touching{pt(0, 0), pt(1, 1)};
  CHECK_THROWS_AS(count_segment_crossings(touching, lines), EndpointOnLine);

  auto found = find_complete_face(lines);
  CHECK(count_segment_crossings(extract_111_segment(found.arrangement, found.face()), lines).colors.balanced(1));
}

TEST_CASE("arc masks and runs") {
  std::vector<CirclePoint> pts{{make_rat(1, 8), Color::Red}, {make_rat(3, 8), Color::Green},
                               {make_rat(5, 8), Color::Blue}, {make_rat(7, 8), Color::Red}};
  ArcSet wrap = ArcSet::from_arcs(std::vector<Arc>{{make_rat(3, 4), make_rat(5, 4)}});
  CHECK(arcset_mask(wrap, pts) == 0b1001);
  CHECK(cyclic_runs(0b1001, pts) == 1);
  CHECK(cyclic_runs(0b0101, pts) == 2);
  CHECK(cyclic_runs(0b1111, pts) == 1);
  CHECK(cyclic_runs(0, pts) == 0);
}

TEST_CASE("two-arc enumeration") {
  Rng rng(12);
  for (int n = 1; n <= 5; ++n) {
    auto pts = random_circle_points(n, rng);
    auto whole = enumerate_2arc_sets(pts, n);
    CHECK(std::binary_search(whole.begin(), whole.end(), (std::uint64_t{1} << (3 * n)) - 1));
    for (int k = 1; k <= n; ++k) {
      auto found = enumerate_2arc_sets(pts, k);
      CHECK_FALSE(found.empty());
      for (auto m : found) {
        CHECK(std::popcount(m) == 3 * k);
        CHECK(cyclic_runs(m, pts) <= 2);
      }
    }
  }
}

TEST_CASE("blocked colors need two arcs") {
  // R^2 G^4 R^2 B^4 around the circle.
  const int n = 4;
  std::vector<Color> pattern;
  for (int i = 0; i < 2; ++i) pattern.push_back(Color::Red);
  for (int i = 0; i < 4; ++i) pattern.push_back(Color::Green);
  for (int i = 0; i < 2; ++i) pattern.push_back(Color::Red);
  for (int i = 0; i < 4; ++i) pattern.push_back(Color::Blue);
  std::vector<CirclePoint> pts;
  for (int i = 0; i < 3 * n; ++i) pts.push_back({make_rat(2 * i + 1, 6 * n), pattern[static_cast<std::size_t>(i)]});
  auto found = enumerate_2arc_sets(pts, 1);
  REQUIRE_FALSE(found.empty());
  for (auto m : found) CHECK(cyclic_runs(m, pts) == 2);
}

TEST_CASE("wedge oracle") {
  Rng rng(14);
  auto pts = convex_points(2, rng);
  auto empty = brute_oracle_wedges(pts, 0);
  CHECK(std::binary_search(empty.begin(), empty.end(), std::uint64_t{0}));
  auto all = brute_oracle_wedges(pts, 2);
  CHECK(std::binary_search(all.begin(), all.end(), std::uint64_t{0b111111}));
  for (auto m : brute_oracle_wedges(pts, 1)) CHECK(std::popcount(m) == 3);
  CHECK_FALSE(brute_oracle_wedges(pts, 1).empty());
}

TEST_CASE("halfplane splits on the three-disk fixture") {
  for (int n = 2; n <= 4; ++n) {
    auto inst = std::get<std::vector<ColoredPoint>>(generate({GenKind::ThreeDiskTriangle, n, 1}));
    CHECK(balanced_halfplane_splits(inst).empty());
  }
  // A well-mixed set does have a balanced halfplane.
  std::vector<ColoredPoint> mixed{{pt(0, 0), Color::Red},   {pt(1, 5), Color::Green}, {pt(2, 1), Color::Blue},
                                  {pt(10, 0), Color::Red}, {pt(11, 6), Color::Green}, {pt(12, 2), Color::Blue}};
  CHECK(balanced_halfplane_splits(mixed) == std::vector<int>{1});
}

TEST_CASE("L-line oracle") {
  Rng rng(3);
  auto pts = lattice_red_hull(4, rng);
  auto found = brute_oracle_llines(pts);
  CHECK_FALSE(found.empty());
  for (const auto& o : found) {
    CHECK(lline_mask(o.line, pts) == o.mask);
    auto [one, two] = lline_counts(o.line, pts);
    CHECK(one.balanced(o.k));
    CHECK(two.balanced(4 - o.k));
  }
  CHECK(partition_key(0b0011, 4) == partition_key(0b1100, 4));
}

TEST_CASE("small orthogonal hulls") {
  CHECK(minimum_ortho_hull_size(1) == 1);
  CHECK(minimum_ortho_hull_size(3) == 3);
  CHECK(minimum_ortho_hull_size(5) == 4);
  CHECK(minimum_ortho_hull_size(6) == 4);
}

TEST_CASE("shortest plans") {
  auto d = bfs_plan_lengths(7);
  CHECK(d[7] == 0);
  CHECK(d[3] == 1);
  CHECK(d[4] == 2);
  CHECK(d[1] == 2);
}
