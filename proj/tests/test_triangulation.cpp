#include <doctest.h>

#include "support.hpp"

#include <tricut/errors.hpp>
#include <tricut/triangulation.hpp>

#include <set>

using namespace tricut;

namespace {

// n_S computed from scratch: facets whose color set equals {0..d} minus one.
std::vector<int> count_types(const ColoredTriangulation& t) {
  std::vector<int> n(static_cast<std::size_t>(t.d) + 1, 0);
  for (const auto& s : t.simplices) {
    std::set<int> colors;
    for (int v : s) colors.insert(t.colors.at(v));
    if (static_cast<int>(colors.size()) != t.d) continue;
    for (int omit = 0; omit <= t.d; ++omit)
      if (!colors.count(omit)) ++n[static_cast<std::size_t>(omit)];
  }
  return n;
}

}  // namespace

TEST_CASE("triangle boundary") {
  ColoredTriangulation t{2, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 1}, {2, 2}}};
  CHECK(parity_audit(t) == Parity::AllOdd);
  CHECK(good_type_counts(t) == std::vector<int>{1, 1, 1});
}

TEST_CASE("tetrahedron boundary") {
  ColoredTriangulation t{3, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}};
  CHECK(parity_audit(t) == Parity::AllOdd);
}

TEST_CASE("octahedron with antipodal colors") {
  ColoredTriangulation t;
  t.d = 3;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) t.simplices.push_back({a, b, c});
  t.colors = {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}};
  auto expected = count_types(t);
  CHECK(expected == std::vector<int>{0, 0, 0, 8});
  CHECK(good_type_counts(t) == expected);
  CHECK(parity_audit(t) == Parity::AllEven);
}

TEST_CASE("malformed triangulations") {
  ColoredTriangulation open{2, {{0, 1}, {1, 2}}, {{0, 0}, {1, 1}, {2, 2}}};
  CHECK_THROWS_AS(parity_audit(open), NotPseudomanifold);
  ColoredTriangulation bad_color{2, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 1}, {2, 5}}};
  CHECK_THROWS_AS(parity_audit(bad_color), NotPseudomanifold);
  ColoredTriangulation mixed{2, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 1}, {2, 1}}};
  // 0-1, 1-1, 1-0: n_{01} = 2 while the other good types are 0, so this is
  // a valid even triangulation rather than a counterexample.
  CHECK(parity_audit(mixed) == Parity::AllEven);
}

TEST_CASE("random stellar subdivisions never mix parities") {
  Rng rng(31);
  for (int d : {2, 3, 4})
    for (int trial = 0; trial < 40; ++trial) {
      auto t = support::random_sphere(d, static_cast<int>(rng.below(25)), rng);
      CHECK_NOTHROW(validate_pseudomanifold(t));
      CHECK(good_type_counts(t) == count_types(t));
      CHECK_NOTHROW(parity_audit(t));
    }
}
