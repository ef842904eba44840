#include <doctest.h>

#include <tricut/arcset.hpp>
#include <tricut/errors.hpp>
#include <tricut/generate.hpp>

using namespace tricut;

namespace {

Rat q(long p, long d) { return make_rat(p, d); }

ArcSet arcs(std::initializer_list<std::pair<Rat, Rat>> list) {
  std::vector<Arc> v;
  for (const auto& [lo, hi] : list) v.push_back({lo, hi});
  return ArcSet::from_arcs(v);
}

ArcSet random_arcset(Rng& rng) {
  std::vector<Interval> pieces;
  int count = static_cast<int>(rng.below(4));
  for (int i = 0; i < count; ++i) {
    Rat a = q(rng.between(0, 40), 40), b = q(rng.between(0, 40), 40);
    if (b < a) std::swap(a, b);
    pieces.push_back({a, b});
  }
  return ArcSet::from_intervals(pieces);
}

}  // namespace

TEST_CASE("complement of simple sets") {
  CHECK(arcset_complement(ArcSet::whole()).empty());
  CHECK(arcset_complement(ArcSet{}).is_whole());
  ArcSet c = arcset_complement(arcs({{q(1, 10), q(2, 5)}}));
  REQUIRE(c.component_count() == 1);
  CHECK(c.arcs()[0].lo == q(2, 5));
  CHECK(c.arcs()[0].hi == q(11, 10));
}

TEST_CASE("color counts and boundary points") {
  std::vector<CirclePoint> pts{{q(1, 4), Color::Red}, {q(3, 4), Color::Green}};
  ColorCounts c = arcset_color_counts(arcs({{q(0, 1), q(1, 2)}}), pts);
  CHECK(c == ColorCounts{{1, 0, 0}});
  CHECK_THROWS_AS(arcset_color_counts(arcs({{q(1, 4), q(1, 2)}}), pts), BoundaryPoint);
}

TEST_CASE("normalization merges touching arcs across zero") {
  ArcSet a = arcs({{q(3, 4), q(1, 1)}, {q(0, 1), q(1, 8)}, {q(1, 8), q(1, 4)}});
  REQUIRE(a.component_count() == 1);
  CHECK(a.arcs()[0].lo == q(3, 4));
  CHECK(a.arcs()[0].hi == q(5, 4));
  CHECK(a.contains(q(0, 1)));
  CHECK(a.contains(q(9, 10)));
  CHECK_FALSE(a.contains(q(1, 2)));
  CHECK(arcs({{q(1, 2), q(3, 2)}}).is_whole());
}

TEST_CASE("membership in A xor its complement") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    ArcSet a = random_arcset(rng);
    ArcSet c = arcset_complement(a);
    CHECK(arcset_intersection(a, c).empty());
    for (int i = 0; i < 20; ++i) {
      Rat t = q(2 * rng.between(0, 39) + 1, 80);
      CHECK(a.contains(t) != c.contains(t));
    }
    CHECK(arcset_complement(c) == a);
  }
}

TEST_CASE("rotation keeps counts") {
  Rng rng(8);
  std::vector<CirclePoint> pts = random_circle_points(4, rng);
  ArcSet a = arcs({{q(1, 3), q(7, 9)}});
  ColorCounts base = arcset_color_counts(a, pts);
  for (Rat d : {q(0, 1), q(1, 2), q(1, 7), q(5, 6)}) {
    CHECK(arcset_color_counts(rotate(a, d), rotate(pts, d)) == base);
  }
  CHECK(rotate(rotate(a, q(1, 2)), q(1, 2)) == a);
  CHECK(rotate(a, q(0, 1)) == a);
}
