#include <doctest.h>

#include <tricut/errors.hpp>
#include <tricut/generate.hpp>
#include <tricut/jordan.hpp>
#include <tricut/oracles.hpp>

#include <algorithm>
#include <cmath>

using namespace tricut;

namespace {

int ceil_log2(int n) {
  int b = 0;
  while ((1 << b) < n) ++b;
  return b;
}

std::vector<CirclePoint> alternating(int n) {
  std::vector<CirclePoint> pts;
  for (int i = 0; i < 3 * n; ++i)
    pts.push_back({make_rat(2 * i + 1, 6 * n), kPrimaryColors[static_cast<std::size_t>(i % 3)]});
  return pts;
}

ColorCounts side_counts(const CutProfile& p, std::span<const CirclePoint> pts, int side) {
  ColorCounts c;
  for (const auto& q : pts)
    if (p.side(q.t) == side) c[q.color] += 1;
  return c;
}

}  // namespace

TEST_CASE("plan examples") {
  CHECK(plan_string(plan_ops(2, 1).ops) == "f");
  CHECK(plan_ops(5, 5).ops.empty());
  OpPlan p = plan_ops(7, 2);
  CHECK(evaluate_plan(7, p.ops) == 2);
  CHECK(static_cast<int>(p.ops.size()) <= 2 * ceil_log2(7) + 4);
  CHECK(parse_plan("fgf") == std::vector<Op>{Op::Halve, Op::Complement, Op::Halve});
  CHECK_THROWS_AS(parse_plan("fx"), PreconditionViolated);
  CHECK_THROWS_AS(plan_ops(5, 0), PreconditionViolated);
  CHECK_THROWS_AS(plan_ops(5, 6), PreconditionViolated);
}

TEST_CASE("plans evaluate correctly and stay short") {
  for (int n = 2; n <= 300; ++n) {
    std::vector<int> shortest = bfs_plan_lengths(n);
    for (int k = 1; k <= n; ++k) {
      OpPlan p = plan_ops(n, k);
      CHECK(evaluate_plan(n, p.ops) == k);
      CHECK(static_cast<int>(p.ops.size()) <= 2 * ceil_log2(n) + 4);
      CHECK(shortest[static_cast<std::size_t>(k)] >= 0);
      CHECK(shortest[static_cast<std::size_t>(k)] <= static_cast<int>(p.ops.size()));
      for (std::size_t i = 1; i < p.ops.size(); ++i)
        CHECK_FALSE((p.ops[i] == Op::Complement && p.ops[i - 1] == Op::Complement));
    }
  }
}

TEST_CASE("cut profile sides alternate") {
  CutProfile p{{Cut{false, 0, make_rat(1, 4)}, Cut{true, 2, make_rat(1, 2)}, Cut{false, 5, make_rat(3, 4)}}};
  CHECK(p.side(make_rat(1, 8)) == -p.side(make_rat(3, 8)));
  CHECK(p.side(make_rat(3, 8)) == -p.side(make_rat(5, 8)));
  CHECK(p.side(make_rat(5, 8)) == -p.side(make_rat(7, 8)));
  CHECK(p.side(make_rat(7, 8)) == 1);  // positive past the last root
  CHECK(p.side(make_rat(1, 2)) == 0);
}

TEST_CASE("moment halving on alternating colors") {
  auto pts = alternating(2);
  MomentHalving h = moment_halve(ArcSet::whole(), pts, 2);
  CHECK(h.counts1.balanced(1));
  CHECK(h.counts2.balanced(1));
  CHECK(arcset_color_counts(h.m1, pts).balanced(1));
  CHECK(arcset_color_counts(h.m2, pts).balanced(1));
  CHECK(h.profile.cuts.size() <= 3);
  CHECK(side_counts(h.profile, pts, 1) == h.counts1);
  CHECK(side_counts(h.profile, pts, -1) == h.counts2);
}

TEST_CASE("odd moment halving cuts one point of each color") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_circle_points(1, rng);
    MomentHalving h = moment_halve(ArcSet::whole(), pts, 1);
    CHECK(h.counts1.total() == 0);
    CHECK(h.counts2.total() == 0);
    REQUIRE(h.profile.cuts.size() == 3);
    ColorCounts on;
    for (const Cut& c : h.profile.cuts) {
      CHECK(c.on_point);
      on[pts[static_cast<std::size_t>(c.index)].color] += 1;
    }
    CHECK(on.balanced(1));
  }
}

TEST_CASE("moment halving properties on random arc sets") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    auto pts = random_circle_points(n, rng);
    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    ArcSet a = find_k_arcset(pts, k);
    if (a.is_whole()) continue;
    // Move 0 into the complement, which is nonempty here.
    ArcSet comp = arcset_complement(a);
    Rat shift = -(comp.arcs().front().lo + comp.arcs().front().hi) / 2;
    auto [moved_pts, moved] = rotate_parameters(pts, a, shift);
    std::sort(moved_pts.begin(), moved_pts.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
    MomentHalving h = moment_halve(moved, moved_pts, k);
    CHECK(h.profile.cuts.size() <= 3);
    CHECK(h.counts1.balanced(k / 2));
    CHECK(h.counts2.balanced(k / 2));
    CHECK(arcset_color_counts(h.m1, moved_pts) == h.counts1);
    CHECK(arcset_color_counts(h.m2, moved_pts) == h.counts2);
    CHECK(h.m1.component_count() + h.m2.component_count() <= 5);
    CHECK(std::min(h.m1.component_count(), h.m2.component_count()) <= 2);
    CHECK(arcset_intersection(h.m1, h.m2).empty());
    for (const auto& p : moved_pts) {
      if (h.m1.contains(p.t) || h.m2.contains(p.t)) CHECK(moved.contains(p.t));
    }
  }
}

TEST_CASE("moment halving preconditions") {
  auto pts = alternating(2);
  ArcSet wrapped = ArcSet::from_arcs(std::vector<Arc>{{make_rat(3, 4), make_rat(5, 4)}});
  CHECK_THROWS_AS(moment_halve(wrapped, pts, 1), PreconditionViolated);
  ArcSet too_few = ArcSet::from_arcs(std::vector<Arc>{{make_rat(1, 100), make_rat(1, 50)}});
  CHECK_THROWS_AS(moment_halve(too_few, pts, 1), PreconditionViolated);
}

TEST_CASE("k-arc sets") {
  Rng rng(21);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      auto pts = random_circle_points(n, rng);
      CHECK(find_k_arcset(pts, n).is_whole());
      CHECK(find_k_arcset(pts, 0).empty());
      for (int k = 1; k <= n; ++k) {
        int halvings = 0;
        ArcSet a = find_k_arcset(pts, k, [&](const ArcStep& s) {
          if (s.op != Op::Halve) return;
          ++halvings;
          CHECK(s.m1_components + s.m2_components <= 5);
          REQUIRE(s.profile.has_value());
          CHECK(s.profile->cuts.size() <= 3);
        });
        CHECK(a.component_count() <= 2);
        CHECK(arcset_color_counts(a, pts).balanced(k));
        auto oracle = enumerate_2arc_sets(pts, k);
        CHECK(std::binary_search(oracle.begin(), oracle.end(), arcset_mask(a, pts)));
        const OpPlan plan = plan_ops(n, k);
        CHECK(halvings == static_cast<int>(std::count(plan.ops.begin(), plan.ops.end(), Op::Halve)));
      }
    }
  }
  CHECK_THROWS_AS(find_k_arcset(alternating(2), 3), PreconditionViolated);
}

TEST_CASE("complementary targets have complementary counts") {
  Rng rng(8);
  auto pts = random_circle_points(5, rng);
  for (int k = 1; k < 5; ++k) {
    ColorCounts a = arcset_color_counts(find_k_arcset(pts, k), pts);
    ColorCounts b = arcset_color_counts(find_k_arcset(pts, 5 - k), pts);
    for (Color c : kPrimaryColors) CHECK(a[c] + b[c] == 5);
  }
}

TEST_CASE("parameter rotation") {
  Rng rng(2);
  auto pts = random_circle_points(3, rng);
  ArcSet a = find_k_arcset(pts, 2);
  auto [same_pts, same] = rotate_parameters(pts, a, Rat(0));
  CHECK(same == a);
  auto [p1, a1] = rotate_parameters(pts, a, make_rat(1, 2));
  auto [p2, a2] = rotate_parameters(p1, a1, make_rat(1, 2));
  CHECK(a2 == a);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(p2[i].t == pts[i].t);
  for (int i = 0; i < 10; ++i) {
    Rat d = make_rat(static_cast<std::int64_t>(rng.below(997)), 997);
    auto [pr, ar] = rotate_parameters(pts, a, d);
    CHECK(arcset_color_counts(ar, pr) == arcset_color_counts(a, pts));
  }
}

TEST_CASE("circle point validation") {
  std::vector<CirclePoint> dup{{make_rat(1, 4), Color::Red}, {make_rat(1, 4), Color::Green}, {make_rat(1, 2), Color::Blue}};
  CHECK_THROWS_AS(validate_circle_points(dup), PreconditionViolated);
  std::vector<CirclePoint> out_of_range{{make_rat(5, 4), Color::Red}, {make_rat(1, 3), Color::Green}, {make_rat(1, 2), Color::Blue}};
  CHECK_THROWS_AS(validate_circle_points(out_of_range), PreconditionViolated);
  CHECK(validate_circle_points(alternating(3)) == 3);
}
