#include "tricut/arrangement.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <string>

namespace tricut {

std::vector<int> Face::boundary() const {
  const std::size_t m = edge_lines.size();
  std::size_t start = 0;
  if (!bounded) {
    // Begin at the first line edge following a box edge.
    for (std::size_t i = 0; i < m; ++i)
      if (edge_lines[i] == kBoxEdge && edge_lines[(i + 1) % m] != kBoxEdge) {
        start = (i + 1) % m;
        break;
      }
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < m; ++k) {
    int id = edge_lines[(start + k) % m];
    if (id != kBoxEdge) out.push_back(id);
  }
  return out;
}

Point Face::interior_point() const {
  Point c{Rat(0), Rat(0)};
  for (const auto& p : polygon) c = c + p;
  return Rat(1, static_cast<unsigned long>(polygon.size())) * c;
}

EdgeTypeCounts edge_type_counts(const DualCycle& c) {
  EdgeTypeCounts t;
  const std::size_t m = c.colors.size();
  for (std::size_t i = 0; i < m; ++i) {
    Color u = c.colors[i];
    Color v = c.colors[(i + 1) % m];
    if (index(u) > index(v)) std::swap(u, v);
    if (u == Color::Red && v == Color::Red) ++t.rr;
    else if (u == Color::Green && v == Color::Green) ++t.gg;
    else if (u == Color::Blue && v == Color::Blue) ++t.bb;
    else if (u == Color::Red && v == Color::Green) ++t.rg;
    else if (u == Color::Red && v == Color::Blue) ++t.rb;
    else if (u == Color::Green && v == Color::Blue) ++t.gb;
  }
  return t;
}

std::array<int, 3> cycle_parity(const DualCycle& c) {
  EdgeTypeCounts t = edge_type_counts(c);
  return {t.rg % 2, t.rb % 2, t.gb % 2};
}

bool is_complete(const DualCycle& c) {
  auto p = cycle_parity(c);
  return p[0] == 1 && p[1] == 1 && p[2] == 1;
}

LabelledPolygon clip(const LabelledPolygon& poly, const Line& l, int side, int label) {
  const std::size_t m = poly.vertices.size();
  std::vector<int> d(m);
  std::vector<Rat> val(m);
  for (std::size_t i = 0; i < m; ++i) {
    val[i] = side * l.eval(poly.vertices[i]);
    d[i] = sgn(val[i]);
  }
  LabelledPolygon out;
  auto emit = [&](Point p, int lab) {
    out.vertices.push_back(std::move(p));
    out.labels.push_back(lab);
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const Point& cur = poly.vertices[i];
    const Point& nxt = poly.vertices[j];
    if (d[i] >= 0) {
      if (d[j] >= 0) {
        emit(cur, poly.labels[i]);
      } else if (d[i] == 0) {
        emit(cur, label);
      } else {
        emit(cur, poly.labels[i]);
        Rat s = val[i] / (val[i] - val[j]);
        emit(cur + s * (nxt - cur), label);
      }
    } else if (d[j] > 0) {
      Rat s = val[i] / (val[i] - val[j]);
      emit(cur + s * (nxt - cur), poly.labels[i]);
    }
  }
  // Drop zero-length edges.
  LabelledPolygon clean;
  const std::size_t k = out.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (out.vertices[i] == out.vertices[(i + 1) % k] && k > 1) continue;
    clean.vertices.push_back(out.vertices[i]);
    clean.labels.push_back(out.labels[i]);
  }
  if (clean.vertices.size() < 3) return {};
  bool has_area = false;
  for (std::size_t i = 2; i < clean.vertices.size() && !has_area; ++i)
    has_area = orient(clean.vertices[0], clean.vertices[1], clean.vertices[i]) != 0;
  if (!has_area) return {};
  return clean;
}

void validate_simple(std::span<const ColoredLine> lines) {
  const std::size_t m = lines.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (parallel(lines[i].line, lines[j].line))
        throw NotSimple("lines " + std::to_string(i) + " and " + std::to_string(j) +
                        " are parallel");
      Point v = *intersect(lines[i].line, lines[j].line);
      for (std::size_t k = j + 1; k < m; ++k)
        if (lines[k].line.eval(v) == 0)
          throw NotSimple("lines " + std::to_string(i) + ", " + std::to_string(j) + " and " +
                          std::to_string(k) + " meet at one point");
    }
}

std::size_t Arrangement::bounded_face_count() const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.bounded; }));
}

std::size_t Arrangement::edge_count() const {
  // Each line is cut into (vertices on it + 1) edges.
  const std::size_t m = lines_.size();
  return m == 0 ? 0 : m * m;
}

int Arrangement::face_with_signs(const std::vector<std::int8_t>& signs) const {
  auto it = by_signs_.find(signs);
  if (it == by_signs_.end()) throw PreconditionViolated("no face with the given sign vector");
  return it->second;
}

int Arrangement::locate(const Point& p) const {
  std::vector<std::int8_t> signs;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    int s = lines_[i].line.side(p);
    if (s == 0) throw OnBoundary("point lies on line " + std::to_string(i));
    signs.push_back(static_cast<std::int8_t>(s));
  }
  return face_with_signs(signs);
}

DualCycle Arrangement::dual_cycle(const Face& f) const {
  if (!f.bounded) throw UnboundedFace("face " + std::to_string(f.id) + " is unbounded");
  DualCycle c;
  for (int id : f.boundary()) c.colors.push_back(lines_[static_cast<std::size_t>(id)].color);
  return c;
}

Arrangement build_arrangement(std::span<const ColoredLine> lines) {
  validate_simple(lines);
  Arrangement arr;
  arr.lines_.assign(lines.begin(), lines.end());
  const std::size_t m = lines.size();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      arr.vertices_.push_back(
          {*intersect(lines[i].line, lines[j].line), static_cast<int>(i), static_cast<int>(j)});

  // Box strictly enclosing every vertex (margin 1); with fewer than two lines
  // include one point of each line so every face meets the box.
  std::vector<Point> anchors;
  for (const auto& v : arr.vertices_) anchors.push_back(v.at);
  if (m < 2) {
    for (const auto& l : lines) {
      if (l.line.vertical()) anchors.push_back({Rat(-l.line.c / l.line.a), Rat(0)});
      else anchors.push_back({Rat(0), Rat(-l.line.c / l.line.b)});
    }
  }
  if (anchors.empty()) anchors.push_back({Rat(0), Rat(0)});
  Rat minx = anchors[0].x, maxx = anchors[0].x, miny = anchors[0].y, maxy = anchors[0].y;
  for (const auto& a : anchors) {
    if (a.x < minx) minx = a.x;
    if (a.x > maxx) maxx = a.x;
    if (a.y < miny) miny = a.y;
    if (a.y > maxy) maxy = a.y;
  }
  arr.box_lo_ = {Rat(minx - 1), Rat(miny - 1)};
  arr.box_hi_ = {Rat(maxx + 1), Rat(maxy + 1)};

  // Sign vectors of all faces: the four quadrants around every vertex.
  std::vector<std::vector<std::int8_t>> sign_vectors;
  if (m == 0) {
    sign_vectors.emplace_back();
  } else if (m == 1) {
    sign_vectors.push_back({1});
    sign_vectors.push_back({-1});
  } else {
    for (const auto& v : arr.vertices_) {
      std::vector<std::int8_t> base(m);
      for (std::size_t k = 0; k < m; ++k)
        base[k] = static_cast<std::int8_t>(lines[k].line.side(v.at));
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          auto s = base;
          s[static_cast<std::size_t>(v.line_a)] = static_cast<std::int8_t>(sa);
          s[static_cast<std::size_t>(v.line_b)] = static_cast<std::int8_t>(sb);
          sign_vectors.push_back(std::move(s));
        }
    }
  }
  std::sort(sign_vectors.begin(), sign_vectors.end());
  sign_vectors.erase(std::unique(sign_vectors.begin(), sign_vectors.end()), sign_vectors.end());

  LabelledPolygon box;
  box.vertices = {arr.box_lo_, {arr.box_hi_.x, arr.box_lo_.y}, arr.box_hi_, {arr.box_lo_.x, arr.box_hi_.y}};
  box.labels = {kBoxEdge, kBoxEdge, kBoxEdge, kBoxEdge};

  for (auto& s : sign_vectors) {
    LabelledPolygon poly = box;
    for (std::size_t k = 0; k < m && !poly.vertices.empty(); ++k)
      poly = clip(poly, lines[k].line, s[k], static_cast<int>(k));
    if (poly.vertices.empty())
      throw InternalError("face with a vertex quadrant sign vector has empty clip");
    Face f;
    f.id = static_cast<int>(arr.faces_.size());
    f.bounded = std::none_of(poly.labels.begin(), poly.labels.end(),
                             [](int l) { return l == kBoxEdge; });
    f.polygon = std::move(poly.vertices);
    f.edge_lines = std::move(poly.labels);
    f.signs = s;
    arr.by_signs_.emplace(std::move(s), f.id);
    arr.faces_.push_back(std::move(f));
  }
  return arr;
}

bool is_complete(const Arrangement& arr, const Face& f) { return is_complete(arr.dual_cycle(f)); }

}  // namespace tricut
