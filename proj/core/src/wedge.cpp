#include "tricut/wedge.hpp"

#include "tricut/arrangement.hpp"
#include "tricut/cell_finder.hpp"
#include "tricut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tricut {

namespace {

std::vector<Rat> slopes_from(const Point& apex, std::span<const ColoredPoint> points) {
  std::vector<Rat> s;
  s.reserve(points.size());
  for (const auto& p : points) {
    if (p.at.x == apex.x) throw DegenerateApex("apex shares an x-coordinate with an input point");
    s.push_back((p.at.y - apex.y) / (p.at.x - apex.x));
  }
  return s;
}

void require_primary(std::span<const ColoredPoint> points) {
  for (const auto& p : points)
    if (p.color == Color::Black) throw PreconditionViolated("black points are not supported");
}

ColorCounts tally(std::span<const ColoredPoint> points) {
  ColorCounts c;
  for (const auto& p : points) c[p.color] += 1;
  return c;
}

void add_color(LatticePoint& q, Color c, int delta) {
  if (c == Color::Blue) q.x += delta;
  if (c == Color::Green) q.y += delta;
}

// +1 if `l` evaluates positive on the side where y is large, -1 otherwise.
int upward_sign(const Line& l) {
  return l.b < 0 ? -1 : 1;
}

// Sign relating the evaluation of `l` at p to that of r^-1(l) at r^-1(p).
int inversion_flip(const Line& l, const RationalRotation& r) {
  Point on = l.b != 0 ? Point{Rat(0), Rat(-l.c / l.b)} : Point{Rat(-l.c / l.a), Rat(0)};
  Point off{on.x + l.a, on.y + l.b};
  Line m = r.invert(l);
  return l.side(off) * m.side(r.invert(off));
}

std::string event_trace(const Rat& x0, const std::vector<std::array<std::int64_t, 5>>& log) {
  std::ostringstream os;
  os << "{\"x0\":\"" << to_string(x0) << "\",\"events\":[";
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto& e = log[i];
    if (i) os << ',';
    os << "{\"event\":" << e[0] << ",\"position\":" << e[1] << ",\"vertex\":" << e[2]
       << ",\"q\":[" << e[3] << ',' << e[4] << "]}";
  }
  os << "]}";
  return os.str();
}

struct PairEvent {
  Rat y;
  int i;
  int j;
};

}  // namespace

bool wedge_contains(const DoubleWedge& w, const Point& p) {
  int s1 = w.line1.side(p);
  int s2 = w.line2.side(p);
  if (s1 == 0 || s2 == 0) throw OnBoundary("point on a wedge boundary line");
  bool opposite = s1 != s2;
  return w.sector == DoubleWedge::Sector::Pair1 ? opposite : !opposite;
}

ColorCounts wedge_counts(const DoubleWedge& w, std::span<const ColoredPoint> points) {
  ColorCounts c;
  for (const auto& p : points)
    if (p.color != Color::Black && wedge_contains(w, p.at)) c[p.color] += 1;
  return c;
}

SlopeOrdering ordering_at(const Point& apex, std::span<const ColoredPoint> points) {
  std::vector<Rat> s = slopes_from(apex, points);
  SlopeOrdering out{apex, std::vector<int>(points.size())};
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(),
            [&](int a, int b) { return s[static_cast<std::size_t>(a)] < s[static_cast<std::size_t>(b)]; });
  for (std::size_t k = 1; k < out.order.size(); ++k)
    if (s[static_cast<std::size_t>(out.order[k - 1])] == s[static_cast<std::size_t>(out.order[k])])
      throw DegenerateApex("apex is collinear with two input points");
  return out;
}

DoubleWedge wedge_for_window(const SlopeOrdering& sigma, std::span<const ColoredPoint> points,
                             int start, int length) {
  const int n = static_cast<int>(sigma.order.size());
  if (n == 0) throw PreconditionViolated("wedge over an empty point set");
  if (length < 0 || length > n) throw PreconditionViolated("window length out of range");
  std::vector<Rat> s = slopes_from(sigma.apex, points);
  auto slope_at = [&](int pos) -> const Rat& {
    return s[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(pos)])];
  };
  start = ((start % n) + n) % n;

  bool between = true;
  int lo = start, hi = start + length - 1;
  if (length == n) {
    between = false;
    length = 0;
  } else if (start + length > n) {
    between = false;
    lo = start + length - n;
    hi = start - 1;
  }

  Rat m1, m2;
  if (length == 0) {
    m1 = slope_at(n - 1) + 1;
    m2 = slope_at(n - 1) + 2;
  } else {
    m1 = lo == 0 ? Rat(slope_at(0) - 1) : Rat((slope_at(lo - 1) + slope_at(lo)) / 2);
    m2 = hi == n - 1 ? Rat(slope_at(n - 1) + 1) : Rat((slope_at(hi) + slope_at(hi + 1)) / 2);
  }

  DoubleWedge w{sigma.apex, line_with_slope(m1, sigma.apex), line_with_slope(m2, sigma.apex),
                DoubleWedge::Sector::Pair1};
  Point witness{sigma.apex.x + 1, sigma.apex.y + (m1 + m2) / 2};
  bool witness_opposite = w.line1.side(witness) != w.line2.side(witness);
  bool pair1 = witness_opposite == between;
  w.sector = pair1 ? DoubleWedge::Sector::Pair1 : DoubleWedge::Sector::Pair2;
  return w;
}

LatticePolygon WedgeCurve::loop() const { return LatticePolygon{q}; }

LatticePolygon WedgeCurve::closed() const {
  LatticePolygon c{q};
  for (const auto& v : q) c.vertices.push_back(-v);
  return c;
}

WedgeCurve wedge_curve(const SlopeOrdering& sigma, std::span<const ColoredPoint> points) {
  const int total = static_cast<int>(points.size());
  if (total == 0 || total % 6 != 0) throw PreconditionViolated("need 6n points");
  const int n = total / 6;
  require_primary(points);
  if (!tally(points).balanced(2 * n)) throw PreconditionViolated("need 2n points of each color");
  if (static_cast<int>(sigma.order.size()) != total) throw PreconditionViolated("ordering size mismatch");

  WedgeCurve c;
  c.n = n;
  c.q.resize(static_cast<std::size_t>(total));
  auto color_at = [&](int pos) {
    return points[static_cast<std::size_t>(sigma.order[static_cast<std::size_t>(pos % total)])].color;
  };
  LatticePoint cur{-n, -n};
  for (int pos = 0; pos < 3 * n; ++pos) add_color(cur, color_at(pos), 1);
  for (int k = 0; k < total; ++k) {
    c.q[static_cast<std::size_t>(k)] = cur;
    if (cur == LatticePoint{}) c.zeros.push_back(k);
    add_color(cur, color_at(k), -1);
    add_color(cur, color_at(k + 3 * n), 1);
  }
  return c;
}

bool is_window_step(LatticePoint d) {
  static constexpr std::array<std::array<int, 2>, 7> kSteps{
      {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};
  return std::any_of(kSteps.begin(), kSteps.end(),
                     [&](const auto& s) { return d.x == s[0] && d.y == s[1]; });
}

BalancedWedge sweep_balanced_wedge(std::span<const ColoredPoint> points,
                                   const SweepObserver& observer) {
  const int total = static_cast<int>(points.size());
  if (total == 0 || total % 6 != 0) throw PreconditionViolated("need 6n points");
  const int n = total / 6;
  require_primary(points);
  if (!tally(points).balanced(2 * n)) throw PreconditionViolated("need 2n points of each color");
  std::vector<Point> at = positions(points);
  if (!check_general_position(at, PositionMode::DistinctXY))
    throw PreconditionViolated("points must have distinct x- and y-coordinates");
  if (!check_general_position(at, PositionMode::NoThreeCollinear))
    throw PreconditionViolated("three input points are collinear");

  Rat x0 = std::min_element(at.begin(), at.end(), [](const Point& a, const Point& b) {
             return a.x < b.x;
           })->x - 1;
  std::vector<PairEvent> events;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 4 * total * total) throw InternalError("no tie-free sweep line found");
    events.clear();
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j) {
        const Point& a = at[static_cast<std::size_t>(i)];
        const Point& b = at[static_cast<std::size_t>(j)];
        events.push_back({a.y + (x0 - a.x) * (b.y - a.y) / (b.x - a.x), i, j});
      }
    std::sort(events.begin(), events.end(), [](const PairEvent& a, const PairEvent& b) { return a.y > b.y; });
    bool tie = false;
    for (std::size_t e = 1; e < events.size() && !tie; ++e) tie = events[e - 1].y == events[e].y;
    if (!tie) break;
    x0 -= Rat(1, 2);
  }

  const auto event_count = static_cast<int>(events.size());
  auto apex_after = [&](int e) {
    // Apex for the ordering after processing events 0..e (e = -1: none).
    if (e < 0) return Point{x0, events.front().y + 1};
    if (e + 1 >= event_count) return Point{x0, events.back().y - 1};
    return Point{x0, (events[static_cast<std::size_t>(e)].y + events[static_cast<std::size_t>(e) + 1].y) / 2};
  };

  SlopeOrdering sigma = ordering_at(apex_after(-1), points);
  std::vector<int>& order = sigma.order;
  std::vector<int> pos(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  std::vector<LatticePoint> q = wedge_curve(sigma, points).q;
  std::vector<LatticePoint> previous;
  std::vector<std::array<std::int64_t, 5>> log;

  if (observer) observer(SweepStep{-1, -1, &order, &q, &q});

  auto realize = [&](int e, int start) {
    BalancedWedge out;
    Point apex = apex_after(e);
    out.ordering = ordering_at(apex, points);
    if (out.ordering.order != order)
      throw InternalError("maintained ordering diverged from the apex ordering", event_trace(x0, log));
    out.wedge = wedge_for_window(out.ordering, points, start, 3 * n);
    out.window_start = start;
    out.events_processed = e + 1;
    out.event_count = event_count;
    out.counts = wedge_counts(out.wedge, points);
    if (!out.counts.balanced(n))
      throw InternalError("realized wedge is not balanced", event_trace(x0, log));
    return out;
  };

  for (int k = 0; k < total; ++k)
    if (q[static_cast<std::size_t>(k)] == LatticePoint{}) return realize(-1, k);

  for (int e = 0; e < event_count; ++e) {
    const PairEvent& ev = events[static_cast<std::size_t>(e)];
    int pi = pos[static_cast<std::size_t>(ev.i)];
    int pj = pos[static_cast<std::size_t>(ev.j)];
    if (std::abs(pi - pj) != 1)
      throw InternalError("event does not swap adjacent points", event_trace(x0, log));
    int a = std::min(pi, pj);
    int lower = order[static_cast<std::size_t>(a)];
    int upper = order[static_cast<std::size_t>(a) + 1];
    if (observer) previous = q;

    std::swap(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(a) + 1]);
    pos[static_cast<std::size_t>(lower)] = a + 1;
    pos[static_cast<std::size_t>(upper)] = a;

    Color cl = points[static_cast<std::size_t>(lower)].color;
    Color cu = points[static_cast<std::size_t>(upper)].color;
    // Window starting at a+1 trades `upper` for `lower`; its antipode, the
    // window ending at a, does the reverse.
    const int s = a + 1;
    const int t = ((a + 1 - 3 * n) % total + total) % total;
    add_color(q[static_cast<std::size_t>(s)], cu, -1);
    add_color(q[static_cast<std::size_t>(s)], cl, 1);
    add_color(q[static_cast<std::size_t>(t)], cl, -1);
    add_color(q[static_cast<std::size_t>(t)], cu, 1);
    log.push_back({e, a, s, q[static_cast<std::size_t>(s)].x, q[static_cast<std::size_t>(s)].y});

    if (observer) observer(SweepStep{e, a, &order, &q, &previous});

    if (q[static_cast<std::size_t>(s)] == LatticePoint{}) return realize(e, std::min(s, t));
  }
  throw InternalError("sweep exhausted all events without a balanced window", event_trace(x0, log));
}

DoubleWedge wedge_from_dual_segment(const Segment& s) {
  if (s.p.x == s.q.x) throw PreconditionViolated("dual segment endpoints share an x-coordinate");
  Line l1 = dual_point_to_line(s.p);
  Line l2 = dual_point_to_line(s.q);
  Point apex = *intersect(l1, l2);
  // A point lies in the wedge iff it is above exactly one of l1, l2.
  bool pair1 = upward_sign(l1) * upward_sign(l2) > 0;
  return DoubleWedge{apex, l1, l2, pair1 ? DoubleWedge::Sector::Pair1 : DoubleWedge::Sector::Pair2};
}

Segment dual_segment_of(const DoubleWedge& w) {
  return Segment{dual_line_to_point(w.line1), dual_line_to_point(w.line2)};
}

DoubleWedge invert_wedge(const DoubleWedge& w, const RationalRotation& r) {
  DoubleWedge out{r.invert(w.apex), r.invert(w.line1), r.invert(w.line2), w.sector};
  if (inversion_flip(w.line1, r) * inversion_flip(w.line2, r) < 0)
    out.sector = w.sector == DoubleWedge::Sector::Pair1 ? DoubleWedge::Sector::Pair2
                                                        : DoubleWedge::Sector::Pair1;
  return out;
}

Wedge111 find_111_wedge(std::span<const ColoredPoint> points) {
  require_primary(points);
  ColorCounts c = tally(points);
  for (Color col : kPrimaryColors)
    if (c[col] == 0) throw MissingColor(std::string("no point of color ") + color_code(col));
  std::vector<Point> at = positions(points);
  if (!check_general_position(at, PositionMode::NoThreeCollinear))
    throw PreconditionViolated("three input points are collinear");

  Wedge111 out;
  std::vector<ColoredPoint> rotated(points.begin(), points.end());
  for (int k = 2;; ++k) {
    std::set<Rat> xs;
    bool distinct = true;
    for (const auto& p : rotated) distinct = distinct && xs.insert(p.at.x).second;
    if (distinct) break;
    if (k > 4 * static_cast<int>(points.size()) * static_cast<int>(points.size()) + 8)
      throw InternalError("no rotation separates the x-coordinates");
    out.rotation = RationalRotation::from_index(k);
    for (std::size_t i = 0; i < points.size(); ++i) rotated[i].at = out.rotation.apply(points[i].at);
  }

  for (const auto& p : rotated) out.dual_lines.push_back({dual_point_to_line(p.at), p.color});
  CompleteFaceResult cell = find_complete_face(out.dual_lines);
  out.dual_segment = extract_111_segment(cell.arrangement, cell.face());
  DoubleWedge local = wedge_from_dual_segment(out.dual_segment);
  if (!wedge_counts(local, rotated).balanced(1))
    throw InternalError("dual wedge of the (1,1,1) segment is not balanced");
  out.wedge = invert_wedge(local, out.rotation);
  if (!wedge_counts(out.wedge, points).balanced(1))
    throw InternalError("rotating the wedge back changed its contents");
  return out;
}

HalvingSegment halving_segment(std::span<const ColoredLine> lines) {
  const int total = static_cast<int>(lines.size());
  if (total == 0 || total % 6 != 0) throw PreconditionViolated("need 6n lines");
  const int n = total / 6;
  ColorCounts c;
  for (const auto& l : lines) {
    if (l.color == Color::Black) throw PreconditionViolated("black lines are not supported");
    c[l.color] += 1;
  }
  if (!c.balanced(2 * n)) throw PreconditionViolated("need 2n lines of each color");
  validate_simple(lines);

  HalvingSegment out;
  std::vector<ColoredLine> rotated(lines.begin(), lines.end());
  for (int k = 2;; ++k) {
    bool ok = std::none_of(rotated.begin(), rotated.end(), [](const ColoredLine& l) { return l.line.vertical(); });
    if (ok) {
      out.dual_points.clear();
      for (const auto& l : rotated) out.dual_points.push_back({dual_line_to_point(l.line), l.color});
      ok = check_general_position(positions(out.dual_points), PositionMode::DistinctXY);
    }
    if (ok) break;
    if (k > 4 * total * total + 8) throw InternalError("no rotation puts the lines in general position");
    out.rotation = RationalRotation::from_index(k);
    for (std::size_t i = 0; i < lines.size(); ++i) rotated[i].line = out.rotation.apply(lines[i].line);
  }

  out.dual_wedge = sweep_balanced_wedge(out.dual_points);
  Segment local = dual_segment_of(out.dual_wedge.wedge);
  ColorCounts crossed;
  for (const auto& l : rotated) {
    int sp = l.line.side(local.p);
    int sq = l.line.side(local.q);
    if (sp == 0 || sq == 0) throw InternalError("halving segment endpoint lies on a line");
    if (sp != sq) crossed[l.color] += 1;
  }
  if (!crossed.balanced(n)) throw InternalError("dual segment of the balanced wedge is not halving");
  out.segment = Segment{out.rotation.invert(local.p), out.rotation.invert(local.q)};
  return out;
}

}  // namespace tricut
