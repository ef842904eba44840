#include "tricut/json_io.hpp"

#include "tricut/errors.hpp"

namespace tricut {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw PreconditionViolated(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Color decode_color(const Json& j) {
  if (!j.is_string()) throw PreconditionViolated("color must be a string");
  auto c = parse_color(j.get<std::string>());
  if (!c) throw PreconditionViolated("unknown color " + j.get<std::string>());
  return *c;
}

std::string color_text(Color c) { return std::string(1, color_code(c)); }

std::int64_t decode_int(const Json& j) {
  if (!j.is_number_integer()) throw PreconditionViolated("expected an integer");
  return j.get<std::int64_t>();
}

const Json& payload(const Json& j, const char* key) {
  if (j.is_array()) return j;
  return field(j, key);
}

template <class T, class F>
std::vector<T> decode_list(const Json& j, F decode) {
  if (!j.is_array()) throw PreconditionViolated("expected a JSON array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(decode(e));
  return out;
}

template <class T>
Json encode_list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(encode(e));
  return a;
}

}  // namespace

Json encode(const Rat& r) { return to_string(r); }

Rat decode_rat(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return make_rat(j.get<std::int64_t>());
  throw PreconditionViolated("rational must be a \"p/q\" string");
}

Json encode(const Point& p) { return Json{{"x", encode(p.x)}, {"y", encode(p.y)}}; }

Point decode_point(const Json& j) {
  if (j.is_array() && j.size() == 2) return {decode_rat(j[0]), decode_rat(j[1])};
  return {decode_rat(field(j, "x")), decode_rat(field(j, "y"))};
}

Json encode(const ColoredPoint& p) {
  Json j = encode(p.at);
  j["color"] = color_text(p.color);
  return j;
}

ColoredPoint decode_colored_point(const Json& j) { return {decode_point(j), decode_color(field(j, "color"))}; }

Json encode(const Line& l) { return Json{{"a", encode(l.a)}, {"b", encode(l.b)}, {"c", encode(l.c)}}; }

Json encode(const ColoredLine& l) {
  Json j = encode(l.line);
  j["color"] = color_text(l.color);
  return j;
}

ColoredLine decode_colored_line(const Json& j) {
  return {make_line(decode_rat(field(j, "a")), decode_rat(field(j, "b")), decode_rat(field(j, "c"))),
          decode_color(field(j, "color"))};
}

Json encode(const Segment& s) { return Json{{"p", encode(s.p)}, {"q", encode(s.q)}}; }

Segment decode_segment(const Json& j) { return {decode_point(field(j, "p")), decode_point(field(j, "q"))}; }

Json encode(const ColorCounts& c) { return Json::array({c.red(), c.green(), c.blue()}); }

Json encode(const ArcSet& a) {
  Json out = Json::array();
  for (const auto& arc : a.arcs()) out.push_back(Json::array({to_string(arc.lo), to_string(arc.hi)}));
  return out;
}

ArcSet decode_arcset(const Json& j) {
  if (!j.is_array()) throw PreconditionViolated("arc set must be an array of [lo, hi] pairs");
  std::vector<Arc> arcs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw PreconditionViolated("arc must be a [lo, hi] pair");
    Rat lo = decode_rat(e[0]);
    Rat hi = decode_rat(e[1]);
    if (!(lo < hi) || hi - lo > 1) throw PreconditionViolated("arc needs lo < hi <= lo + 1");
    arcs.push_back({lo, hi});
  }
  return ArcSet::from_arcs(arcs);
}

Json encode(const CirclePoint& p) { return Json{{"t", encode(p.t)}, {"color", color_text(p.color)}}; }

CirclePoint decode_circle_point(const Json& j) {
  return {decode_rat(field(j, "t")), decode_color(field(j, "color"))};
}

Json encode(const LatticeColoredPoint& p) {
  return Json{{"x", p.x}, {"y", p.y}, {"color", color_text(p.color)}};
}

LatticeColoredPoint decode_lattice_point(const Json& j) {
  return {decode_int(field(j, "x")), decode_int(field(j, "y")), decode_color(field(j, "color"))};
}

Json encode(const LLine& l) {
  return Json{{"corner", Json::array({encode(l.corner.x), encode(l.corner.y)})},
              {"rays", Json::array({std::string(ray_name(l.rays[0])), std::string(ray_name(l.rays[1]))})}};
}

LLine decode_lline(const Json& j) {
  const Json& c = field(j, "corner");
  const Json& r = field(j, "rays");
  if (!c.is_array() || c.size() != 2 || !r.is_array() || r.size() != 2)
    throw PreconditionViolated("L-line needs a 2-element corner and 2 rays");
  LLine l;
  l.corner = {decode_rat(c[0]), decode_rat(c[1])};
  for (std::size_t i = 0; i < 2; ++i) {
    auto ray = r[i].is_string() ? parse_ray(r[i].get<std::string>()) : std::nullopt;
    if (!ray) throw PreconditionViolated("unknown ray direction");
    l.rays[i] = *ray;
  }
  if (l.rays[0] == l.rays[1]) throw PreconditionViolated("L-line rays must differ");
  return l;
}

Json encode(const DoubleWedge& w) {
  return Json{{"apex", encode(w.apex)},
              {"line1", encode(w.line1)},
              {"line2", encode(w.line2)},
              {"sector", w.sector == DoubleWedge::Sector::Pair1 ? "pair-1" : "pair-2"}};
}

DoubleWedge decode_wedge(const Json& j) {
  auto line = [](const Json& l) {
    return make_line(decode_rat(field(l, "a")), decode_rat(field(l, "b")), decode_rat(field(l, "c")));
  };
  DoubleWedge w{decode_point(field(j, "apex")), line(field(j, "line1")), line(field(j, "line2")),
                DoubleWedge::Sector::Pair1};
  const Json& s = field(j, "sector");
  if (s == "pair-2") w.sector = DoubleWedge::Sector::Pair2;
  else if (s != "pair-1") throw PreconditionViolated("sector must be pair-1 or pair-2");
  if (same_line(w.line1, w.line2)) throw PreconditionViolated("wedge boundary lines coincide");
  return w;
}

Json encode(const ColoredTriangulation& t) {
  Json colors = Json::object();
  for (const auto& [v, c] : t.colors) colors[std::to_string(v)] = c;
  return Json{{"d", t.d}, {"simplices", t.simplices}, {"colors", colors}};
}

ColoredTriangulation decode_triangulation(const Json& j) {
  ColoredTriangulation t;
  t.d = static_cast<int>(decode_int(field(j, "d")));
  for (const auto& s : field(j, "simplices")) {
    std::vector<int> ids;
    for (const auto& v : s) ids.push_back(static_cast<int>(decode_int(v)));
    t.simplices.push_back(std::move(ids));
  }
  const Json& colors = field(j, "colors");
  if (!colors.is_object()) throw PreconditionViolated("colors must map vertex ids to colors");
  for (const auto& [key, value] : colors.items()) {
    try {
      t.colors[std::stoi(key)] = static_cast<int>(decode_int(value));
    } catch (const std::logic_error&) {
      throw PreconditionViolated("vertex id " + key + " is not an integer");
    }
  }
  return t;
}

Json encode(const Arrangement& a) {
  Json lines = Json::array();
  for (const auto& l : a.lines()) lines.push_back(encode(l));
  Json vertices = Json::array();
  for (const auto& v : a.vertices()) {
    Json e = encode(v.at);
    e["lines"] = Json::array({v.line_a, v.line_b});
    vertices.push_back(std::move(e));
  }
  Json faces = Json::array();
  for (const auto& f : a.faces()) {
    Json poly = Json::array();
    for (const auto& p : f.polygon) poly.push_back(encode(p));
    faces.push_back(Json{{"id", f.id}, {"bounded", f.bounded}, {"boundary", f.boundary()}, {"polygon", poly}});
  }
  return Json{{"lines", lines}, {"vertices", vertices}, {"faces", faces}};
}

Json encode(const VerificationReport& r) {
  Json counts = Json::array();
  for (const auto& c : r.counts) counts.push_back(encode(c));
  Json answer = r.answer.empty() ? Json() : Json::parse(r.answer);
  return Json{{"instance", r.instance_id},
              {"solver", r.solver},
              {"answer", answer},
              {"oracle_checked", r.oracle_checked},
              {"oracle_answers", r.oracle_answers},
              {"member", r.member},
              {"target", encode(r.target)},
              {"counts", counts},
              {"consistent", r.consistent()},
              {"millis", r.millis}};
}

std::vector<ColoredLine> decode_lines(const Json& j) {
  return decode_list<ColoredLine>(payload(j, "lines"), decode_colored_line);
}

std::vector<ColoredPoint> decode_points(const Json& j) {
  return decode_list<ColoredPoint>(payload(j, "points"), decode_colored_point);
}

std::vector<CirclePoint> decode_circle_points(const Json& j) {
  return decode_list<CirclePoint>(payload(j, "circle_points"), decode_circle_point);
}

std::vector<LatticeColoredPoint> decode_lattice_points(const Json& j) {
  return decode_list<LatticeColoredPoint>(payload(j, "lattice_points"), decode_lattice_point);
}

Json encode_instance(const Instance& inst, const GenSpec& spec) {
  Json j{{"kind", std::string(kind_name(spec.kind))}, {"n", spec.n}, {"seed", spec.seed}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        const char* key = std::is_same_v<T, std::vector<ColoredLine>>    ? "lines"
                          : std::is_same_v<T, std::vector<ColoredPoint>> ? "points"
                          : std::is_same_v<T, std::vector<CirclePoint>>  ? "circle_points"
                                                                         : "lattice_points";
        j[key] = encode_list(v);
      },
      inst);
  return j;
}

Instance decode_instance(const Json& j) {
  if (!j.is_object()) throw PreconditionViolated("instance must be a JSON object");
  if (j.contains("lines")) return decode_lines(j);
  if (j.contains("points")) return decode_points(j);
  if (j.contains("circle_points")) return decode_circle_points(j);
  if (j.contains("lattice_points")) return decode_lattice_points(j);
  throw PreconditionViolated("instance has no lines, points, circle_points or lattice_points");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionViolated(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tricut
