#include <doctest.h>

#include <tricut/cell_finder.hpp>
#include <tricut/errors.hpp>
#include <tricut/generate.hpp>
#include <tricut/oracles.hpp>

#include <algorithm>

using namespace tricut;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<ColoredLine> rgb_triangle() {
  return {{line_through(pt(0, 0), pt(1, 0)), Color::Red},
          {line_through(pt(0, 0), pt(1, 1)), Color::Green},
          {line_through(pt(4, 0), pt(3, 1)), Color::Blue}};
}

void check_complete_and_listed(std::span<const ColoredLine> lines) {
  CompleteFaceResult r = find_complete_face(lines);
  CHECK(is_complete(r.arrangement, r.face()));
  auto all = scan_all_complete_faces(r.arrangement);
  CHECK_FALSE(all.empty());
  CHECK(std::find(all.begin(), all.end(), r.face_id) != all.end());
}

void check_segment(std::span<const ColoredLine> lines) {
  CompleteFaceResult r = find_complete_face(lines);
  Segment s = extract_111_segment(r.arrangement, r.face());
  CrossingCounts c = count_segment_crossings(s, lines);
  CHECK(c.colors == ColorCounts{{1, 1, 1}});
  CHECK(c.black == 0);
}

}  // namespace

TEST_CASE("one line per color gives the triangle") {
  auto lines = rgb_triangle();
  CompleteFaceResult r = find_complete_face(lines);
  CHECK(r.face().bounded);
  CHECK(r.arrangement.bounded_face_count() == 1);
  check_segment(lines);
}

TEST_CASE("random nine-line arrangements") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto lines = random_simple_lines({{3, 3, 3}}, rng);
    check_complete_and_listed(lines);
    check_segment(lines);
  }
}

TEST_CASE("star of concentric lines") {
  std::vector<ColoredLine> star;
  for (int i = 0; i < 9; ++i) {
    Rat slope = make_rat(i - 4, 3);
    star.push_back({line_with_slope(slope, pt(0, 0)), kPrimaryColors[static_cast<std::size_t>(i % 3)]});
  }
  CHECK_THROWS_AS(validate_simple(star), NotSimple);
  auto simple = perturb_to_simple(star);
  check_complete_and_listed(simple);
  check_segment(simple);
}

TEST_CASE("six-line segment") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) check_segment(random_simple_lines({{2, 2, 2}}, rng));
}

TEST_CASE("finder preconditions") {
  auto two = rgb_triangle();
  two.pop_back();
  CHECK_THROWS_AS(find_complete_face(two), MissingColor);
  auto lines = rgb_triangle();
  lines.push_back({line_through(pt(0, 5), pt(1, 5)), Color::Red});
  CHECK_THROWS_AS(find_complete_face(lines), NotSimple);
}

TEST_CASE("segment extraction needs a complete face") {
  Rng rng(12);
  auto lines = random_simple_lines({{3, 3, 3}}, rng);
  Arrangement a = build_arrangement(lines);
  bool tried = false;
  for (const auto& f : a.faces()) {
    if (!f.bounded || is_complete(a, f)) continue;
    CHECK_THROWS_AS(extract_111_segment(a, f), PreconditionViolated);
    tried = true;
  }
  CHECK(tried);
}

TEST_CASE("shielded counterexample") {
  auto lines = gen_shielded_counterexample();
  REQUIRE(lines.size() == 9);
  CHECK_NOTHROW(validate_simple(lines));
  Arrangement a = build_arrangement(lines);
  const std::array<Color, 4> all{Color::Red, Color::Green, Color::Blue, Color::Black};
  CHECK(scan_faces_with_colors(a, all).empty());

  std::vector<ColoredLine> core;
  for (const auto& l : lines)
    if (l.color != Color::Black) core.push_back(l);
  REQUIRE(core.size() == 3);
  Arrangement t = build_arrangement(core);
  CHECK(t.bounded_face_count() == 1);
  CHECK(scan_all_complete_faces(t).size() == 1);
}
