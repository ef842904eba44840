#include <doctest.h>

#include <tricut/errors.hpp>
#include <tricut/generate.hpp>
#include <tricut/json_io.hpp>
#include <tricut/wedge.hpp>

using namespace tricut;

TEST_CASE("rationals and points") {
  CHECK(encode(make_rat(-6, 4)) == "-3/2");
  CHECK(decode_rat(Json("7/3")) == make_rat(7, 3));
  CHECK(decode_rat(Json(5)) == Rat(5));
  CHECK_THROWS_AS(decode_rat(Json(0.5)), PreconditionViolated);
  CHECK(decode_point(Json::array({"1/2", 3})) == Point{make_rat(1, 2), Rat(3)});
  Point p{make_rat(-5), make_rat(7, 2)};
  CHECK(decode_point(encode(p)) == p);
  CHECK_THROWS_AS(decode_point(Json{{"x", "1"}}), PreconditionViolated);
}

TEST_CASE("instances round-trip") {
  for (GenKind k : {GenKind::SimpleLines3C, GenKind::Points3C, GenKind::CirclePoints3C, GenKind::LatticeRedHull}) {
    GenSpec spec{k, 4, 3};
    Json j = encode_instance(generate(spec), spec);
    Json again = encode_instance(decode_instance(parse_json(j.dump())), spec);
    CHECK(j == again);
  }
  CHECK_THROWS_AS(decode_instance(Json{{"foo", 1}}), PreconditionViolated);
  CHECK_THROWS_AS(parse_json("{not json"), PreconditionViolated);
  CHECK_THROWS_AS(decode_points(Json::array({Json{{"x", "0"}, {"y", "0"}, {"color", "Q"}}})), PreconditionViolated);
}

TEST_CASE("arc sets") {
  ArcSet a = ArcSet::from_arcs(std::vector<Arc>{{make_rat(3, 4), make_rat(5, 4)}, {make_rat(1, 3), make_rat(1, 2)}});
  CHECK(decode_arcset(encode(a)) == a);
  CHECK_THROWS_AS(decode_arcset(Json::array({Json::array({"1/2", "1/4"})})), PreconditionViolated);
  CHECK(decode_arcset(encode(ArcSet::whole())).is_whole());
}

TEST_CASE("L-lines and wedges") {
  LLine l{{make_rat(1, 2), make_rat(-3, 2)}, {Ray::Down, Ray::Left}};
  LLine back = decode_lline(encode(l));
  CHECK(back.corner == l.corner);
  CHECK(back.rays == l.rays);
  CHECK_THROWS_AS(decode_lline(Json{{"corner", {"0", "0"}}, {"rays", {"up", "up"}}}), PreconditionViolated);

  Rng rng(1);
  auto pts = random_points({{2, 2, 2}}, rng);
  DoubleWedge w = sweep_balanced_wedge(pts).wedge;
  Json j = encode(w);
  CHECK(j["sector"].is_string());
  DoubleWedge w2 = decode_wedge(j);
  CHECK(wedge_counts(w2, pts) == wedge_counts(w, pts));
  j["sector"] = "pair-3";
  CHECK_THROWS_AS(decode_wedge(j), PreconditionViolated);
}

TEST_CASE("triangulations") {
  Json j = parse_json(R"({"d":2,"simplices":[[0,1],[1,2],[2,0]],"colors":{"0":0,"1":1,"2":2}})");
  ColoredTriangulation t = decode_triangulation(j);
  CHECK(t.simplices.size() == 3);
  CHECK(t.colors.at(2) == 2);
  CHECK(decode_triangulation(encode(t)).simplices == t.simplices);
  j["colors"] = Json{{"a", 0}};
  CHECK_THROWS_AS(decode_triangulation(j), PreconditionViolated);
}
