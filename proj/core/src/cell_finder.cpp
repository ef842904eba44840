#include "tricut/cell_finder.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace tricut {

namespace {

DualCycle cycle_of(const LabelledPolygon& poly, std::span<const ColoredLine> lines) {
  DualCycle c;
  for (int id : poly.labels) c.colors.push_back(lines[static_cast<std::size_t>(id)].color);
  return c;
}

LabelledPolygon initial_triangle(std::span<const ColoredLine> lines, int r, int g, int b) {
  const Line& lr = lines[static_cast<std::size_t>(r)].line;
  const Line& lg = lines[static_cast<std::size_t>(g)].line;
  const Line& lb = lines[static_cast<std::size_t>(b)].line;
  Point rg = *intersect(lr, lg);
  Point gb = *intersect(lg, lb);
  Point br = *intersect(lb, lr);
  LabelledPolygon t;
  if (orient(rg, gb, br) > 0) {
    t.vertices = {rg, gb, br};
    t.labels = {g, b, r};
  } else {
    t.vertices = {rg, br, gb};
    t.labels = {r, b, g};
  }
  return t;
}

}  // namespace

int find_complete_face(const Arrangement& arr) {
  const auto& lines = arr.lines();
  std::array<int, 3> first{-1, -1, -1};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Color c = lines[i].color;
    if (c == Color::Black) throw PreconditionViolated("complete faces need three-colored lines");
    auto& slot = first[static_cast<std::size_t>(index(c))];
    if (slot < 0) slot = static_cast<int>(i);
  }
  for (Color c : kPrimaryColors)
    if (first[static_cast<std::size_t>(index(c))] < 0)
      throw MissingColor(std::string("no line of color ") + color_code(c));

  LabelledPolygon tracked = initial_triangle(lines, first[0], first[1], first[2]);
  if (!is_complete(cycle_of(tracked, lines)))
    throw InternalError("initial R/G/B triangle is not complete");

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int id = static_cast<int>(i);
    if (id == first[0] || id == first[1] || id == first[2]) continue;
    const Line& l = lines[i].line;
    bool pos = false, neg = false;
    for (const auto& v : tracked.vertices) {
      int s = l.side(v);
      pos |= s > 0;
      neg |= s < 0;
    }
    if (!(pos && neg)) continue;
    LabelledPolygon plus = clip(tracked, l, +1, id);
    LabelledPolygon minus = clip(tracked, l, -1, id);
    const bool plus_ok = is_complete(cycle_of(plus, lines));
    const bool minus_ok = is_complete(cycle_of(minus, lines));
    if (plus_ok == minus_ok)
      throw InternalError("inserting line " + std::to_string(i) + " left " +
                          (plus_ok ? "two" : "no") + " complete sub-faces");
    tracked = plus_ok ? std::move(plus) : std::move(minus);
  }

  Point inside{Rat(0), Rat(0)};
  for (const auto& v : tracked.vertices) inside = inside + v;
  inside = Rat(1, static_cast<unsigned long>(tracked.vertices.size())) * inside;
  const int fid = arr.locate(inside);
  if (!is_complete(arr, arr.face(fid))) throw InternalError("tracked face is not complete");
  return fid;
}

CompleteFaceResult find_complete_face(std::span<const ColoredLine> lines) {
  CompleteFaceResult r{build_arrangement(lines), -1};
  r.face_id = find_complete_face(r.arrangement);
  return r;
}

Segment extract_111_segment(const Arrangement& arr, const Face& f) {
  if (!is_complete(arr, f)) throw PreconditionViolated("face is not complete");
  const auto& lines = arr.lines();
  const std::size_t m = f.edge_lines.size();
  auto color_of_edge = [&](std::size_t e) {
    return lines[static_cast<std::size_t>(f.edge_lines[e])].color;
  };

  auto crosses_exactly = [&](const Segment& s, const std::array<int, 3>& wanted) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
      int a = lines[k].line.side(s.p);
      int b = lines[k].line.side(s.q);
      if (a == 0 || b == 0) return false;
      bool is_target = std::find(wanted.begin(), wanted.end(), static_cast<int>(k)) != wanted.end();
      if ((a != b) != is_target) return false;
    }
    return true;
  };

  // From just past a bichromatic corner (in the opposite cone) to just past
  // an edge of the third color, shrinking the overshoot until only those
  // three lines are hit. Endpoints stay off a common vertical so the
  // segment has a dual double wedge with a finite apex.
  const Point centroid = f.interior_point();
  const std::array<Rat, 3> along{make_rat(1, 2), make_rat(1, 3), make_rat(2, 3)};
  for (std::size_t corner = 0; corner < m; ++corner) {  // polygon[i] joins edges i-1 and i
    const Color cx = color_of_edge((corner + m - 1) % m);
    const Color cy = color_of_edge(corner);
    if (cx == cy) continue;
    for (std::size_t target = 0; target < m; ++target) {
      const Color c = color_of_edge(target);
      if (c == cx || c == cy) continue;
      const Point& v = f.polygon[corner];
      const std::array<int, 3> wanted{f.edge_lines[(corner + m - 1) % m], f.edge_lines[corner],
                                      f.edge_lines[target]};
      const Point& e0 = f.polygon[target];
      const Point& e1 = f.polygon[(target + 1) % m];
      for (const Rat& u : along) {
        const Point hit = e0 + u * (e1 - e0);
        for (const Point& aim : {centroid, midpoint(centroid, hit)}) {
          Rat t(1);
          for (int iter = 0; iter < 200; ++iter, t /= 2) {
            Segment s{v + t * (v - aim), hit + t * (hit - v)};
            if (s.p.x != s.q.x && crosses_exactly(s, wanted)) return s;
          }
        }
      }
    }
  }
  throw InternalError("could not realize a (1,1,1) segment");
}

std::vector<ColoredLine> gen_shielded_counterexample() {
  // Triangle (0,0), (4,0), (2,3) with sides r: y = 0, g: 3x - 2y = 0,
  // b: 3x + 2y - 12 = 0. Each side gets two black shields at offset +-1/4
  // whose slopes differ from the side's by 1/Q and 2/Q, so former parallel
  // pairs meet about Q/4 away.
  const Rat q(1000000);
  const Rat off = make_rat(1, 4);
  std::vector<ColoredLine> out;
  auto add = [&](const Rat& slope, const Rat& intercept, Color c) {
    out.push_back({make_line(slope, Rat(-1), intercept), c});
  };
  // r: y = 0
  out.push_back({make_line(Rat(0), Rat(1), Rat(0)), Color::Red});
  // g: y = 3x/2
  out.push_back({make_line(Rat(3), Rat(-2), Rat(0)), Color::Green});
  // b: y = -3x/2 + 6
  out.push_back({make_line(Rat(3), Rat(2), Rat(-12)), Color::Blue});

  struct Side {
    Rat slope;
    Rat intercept;
    Rat normal_scale;  // offset along y giving perpendicular distance ~1/4
  };
  // Offsetting y = s*x + c by d*sqrt(1+s^2) shifts the line by d; use a
  // rational over-approximation of sqrt(1+s^2).
  const std::array<Side, 3> sides{Side{Rat(0), Rat(0), Rat(1)},
                                  Side{make_rat(3, 2), Rat(0), make_rat(9, 5)},
                                  Side{make_rat(-3, 2), Rat(6), make_rat(9, 5)}};
  for (const auto& s : sides) {
    Rat d = off * s.normal_scale;
    add(Rat(s.slope + 1 / q), Rat(s.intercept + d), Color::Black);
    add(Rat(s.slope + 2 / q), Rat(s.intercept - d), Color::Black);
  }
  validate_simple(out);
  return out;
}

std::vector<ColoredLine> perturb_to_simple(std::span<const ColoredLine> lines) {
  Rat eps = make_rat(1, 1000);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 7) {
    std::vector<ColoredLine> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Line& l = lines[i].line;
      const Rat ii(static_cast<unsigned long>(i));
      // a x + b y + c = 0 with slope -a/b: subtracting i^2*eps*b from a
      // raises the slope by i^2*eps.
      Rat a = l.vertical() ? l.a : Rat(l.a - ii * ii * eps * l.b);
      Rat b = l.vertical() ? Rat(ii * ii * eps) : l.b;
      out.push_back({make_line(std::move(a), std::move(b), Rat(l.c + ii * eps)), lines[i].color});
    }
    try {
      validate_simple(out);
      return out;
    } catch (const NotSimple&) {
    }
  }
  throw GenerationFailed("perturbation did not produce a simple arrangement");
}

}  // namespace tricut
