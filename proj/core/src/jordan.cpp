#include "tricut/jordan.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace tricut {

OpPlan plan_ops(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw PreconditionViolated("plan_ops needs 1 <= k <= n");
  OpPlan plan{n, k, {}};
  if (k == n) return plan;
  const int half = n / 2;
  int lo = k, hi = k;
  std::vector<Op> backwards;
  while (!(lo <= half && half <= hi)) {
    if (hi < half) {
      lo = 2 * lo;
      hi = std::min(2 * hi + 1, n);
      backwards.push_back(Op::Halve);
    } else {
      int l2 = n - hi;
      hi = n - lo;
      lo = l2;
      backwards.push_back(Op::Complement);
    }
  }
  plan.ops.push_back(Op::Halve);
  plan.ops.insert(plan.ops.end(), backwards.rbegin(), backwards.rend());
  return plan;
}

int evaluate_plan(int n, std::span<const Op> ops) {
  int x = n;
  for (Op op : ops) x = op == Op::Halve ? x / 2 : n - x;
  return x;
}

std::string plan_string(std::span<const Op> ops) {
  std::string s;
  for (Op op : ops) s.push_back(op == Op::Halve ? 'f' : 'g');
  return s;
}

std::vector<Op> parse_plan(std::string_view text) {
  std::vector<Op> ops;
  for (char c : text) {
    if (c == 'f') ops.push_back(Op::Halve);
    else if (c == 'g') ops.push_back(Op::Complement);
    else throw PreconditionViolated("plan strings use only 'f' and 'g'");
  }
  return ops;
}

int CutProfile::side(const Rat& t) const {
  int above = 0;
  for (const auto& c : cuts) {
    if (c.at == t) return 0;
    if (c.at > t) ++above;
  }
  return above % 2 == 0 ? 1 : -1;
}

int validate_circle_points(std::span<const CirclePoint> points) {
  ColorCounts c;
  std::set<Rat> seen;
  for (const auto& p : points) {
    if (p.color == Color::Black) throw PreconditionViolated("black circle points are not supported");
    if (p.t < 0 || p.t >= 1) throw PreconditionViolated("circle parameter outside [0, 1)");
    if (!seen.insert(p.t).second) throw PreconditionViolated("repeated circle parameter " + to_string(p.t));
    c[p.color] += 1;
  }
  if (c.red() != c.green() || c.red() != c.blue())
    throw PreconditionViolated("circle points are not balanced");
  return c.red();
}

std::pair<std::vector<CirclePoint>, ArcSet> rotate_parameters(std::span<const CirclePoint> points,
                                                               const ArcSet& a, const Rat& delta) {
  return {rotate(points, delta), rotate(a, delta)};
}

namespace {

struct Inside {
  std::vector<CirclePoint> pts;  // points of A in increasing t
  std::vector<Interval> pieces;  // A as linear intervals
  std::vector<std::size_t> piece_of;
};

Inside collect(const ArcSet& a, std::span<const CirclePoint> points) {
  Inside in;
  in.pieces = a.linear_pieces();
  for (const auto& p : points)
    if (a.contains(p.t)) in.pts.push_back(p);
  std::sort(in.pts.begin(), in.pts.end(), [](const CirclePoint& x, const CirclePoint& y) { return x.t < y.t; });
  for (const auto& p : in.pts) {
    std::size_t i = 0;
    while (!(in.pieces[i].lo <= p.t && p.t < in.pieces[i].hi)) ++i;
    in.piece_of.push_back(i);
  }
  return in;
}

// Parameter of each cut position. Gap cuts sit at midpoints of the adjacent
// points (or the adjacent piece end); on-point cuts at the point itself.
Rat cut_parameter(const Inside& in, const Cut& c) {
  const auto m = static_cast<int>(in.pts.size());
  if (c.on_point) return in.pts[static_cast<std::size_t>(c.index)].t;
  if (c.index == 0) return (in.pieces[in.piece_of.front()].lo + in.pts.front().t) / 2;
  if (c.index == m) return (in.pts.back().t + in.pieces[in.piece_of.back()].hi) / 2;
  return (in.pts[static_cast<std::size_t>(c.index) - 1].t + in.pts[static_cast<std::size_t>(c.index)].t) / 2;
}

Rat hole_radius(const Inside& in, const Rat& at) {
  Rat best(1);
  auto consider = [&](const Rat& v) {
    Rat d = v > at ? Rat(v - at) : Rat(at - v);
    if (d > 0 && d < best) best = d;
  };
  for (const auto& p : in.pts) consider(p.t);
  for (const auto& piece : in.pieces) {
    consider(piece.lo);
    consider(piece.hi);
  }
  return best / 4;
}

std::pair<ArcSet, ArcSet> realize(const Inside& in, const CutProfile& profile) {
  std::vector<Rat> breaks;
  std::vector<std::pair<Rat, Rat>> holes;
  for (const auto& c : profile.cuts) {
    if (c.on_point) {
      Rat r = hole_radius(in, c.at);
      holes.push_back({Rat(c.at - r), Rat(c.at + r)});
      breaks.push_back(c.at - r);
      breaks.push_back(c.at + r);
    } else {
      breaks.push_back(c.at);
    }
  }
  std::vector<Interval> one, two;
  for (const auto& piece : in.pieces) {
    std::vector<Rat> pts{piece.lo};
    for (const auto& b : breaks)
      if (piece.lo < b && b < piece.hi) pts.push_back(b);
    pts.push_back(piece.hi);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (!(pts[i] < pts[i + 1])) continue;
      Rat mid = (pts[i] + pts[i + 1]) / 2;
      bool in_hole = std::any_of(holes.begin(), holes.end(),
                                 [&](const auto& h) { return h.first < mid && mid < h.second; });
      if (in_hole) continue;
      (profile.side(mid) > 0 ? one : two).push_back({pts[i], pts[i + 1]});
    }
  }
  return {ArcSet::from_intervals(one), ArcSet::from_intervals(two)};
}

}  // namespace

MomentHalving moment_halve(const ArcSet& a, std::span<const CirclePoint> points, int k) {
  if (k < 0) throw PreconditionViolated("moment_halve needs k >= 0");
  if (a.component_count() > 2) throw PreconditionViolated("moment_halve needs at most two arcs");
  if (!a.is_whole() && a.contains(Rat(0)))
    throw PreconditionViolated("parameter 0 lies in the arc set; rotate first");
  ColorCounts have = arcset_color_counts(a, points);
  if (!have.balanced(k)) throw PreconditionViolated("arc set does not hold k points of each color");

  Inside in = collect(a, points);
  const int m = static_cast<int>(in.pts.size());
  const int half = k / 2;
  const bool odd = k % 2 == 1;

  // prefix[c][j]: points of color c among the first j.
  std::array<std::vector<int>, 3> prefix;
  for (auto& v : prefix) v.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 0; j < m; ++j)
    for (int c = 0; c < 3; ++c)
      prefix[static_cast<std::size_t>(c)][static_cast<std::size_t>(j) + 1] =
          prefix[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] +
          (index(in.pts[static_cast<std::size_t>(j)].color) == c ? 1 : 0);

  // Interleaved positions: gap g at 2g, point j at 2j+1; sentinels -1, 2m+1.
  const int positions = 2 * m + 1;

  std::vector<int> cuts;
  auto evaluate = [&](ColorCounts& c1, ColorCounts& c2) {
    std::vector<int> bounds{-1};
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(positions);
    const int regions = static_cast<int>(bounds.size()) - 1;
    for (int r = 0; r < regions; ++r) {
      // Points strictly between the two bounding positions.
      int lo = (bounds[static_cast<std::size_t>(r)] + 1) / 2;
      int hi = bounds[static_cast<std::size_t>(r) + 1] / 2;
      if (hi <= lo) continue;
      int above = regions - 1 - r;
      ColorCounts& target = above % 2 == 0 ? c1 : c2;
      for (Color col : kPrimaryColors) {
        const auto& pre = prefix[static_cast<std::size_t>(index(col))];
        target[col] += pre[static_cast<std::size_t>(hi)] - pre[static_cast<std::size_t>(lo)];
      }
    }
  };
  auto admissible = [&]() {
    int on_point = 0;
    std::array<bool, 3> seen{false, false, false};
    for (int p : cuts) {
      if (p % 2 == 1) {
        ++on_point;
        auto c = static_cast<std::size_t>(index(in.pts[static_cast<std::size_t>(p / 2)].color));
        if (seen[c]) return false;
        seen[c] = true;
      }
    }
    if (odd ? on_point != 3 : on_point != 0) return false;
    ColorCounts c1, c2;
    evaluate(c1, c2);
    return c1.balanced(half) && c2.balanced(half);
  };

  bool found = false;
  for (int count = 0; count <= 3 && !found; ++count) {
    cuts.assign(static_cast<std::size_t>(count), 0);
    std::function<bool(int, int)> search = [&](int slot, int from) {
      if (slot == count) return admissible();
      for (int p = from; p < positions; ++p) {
        cuts[static_cast<std::size_t>(slot)] = p;
        if (search(slot + 1, p + 1)) return true;
      }
      return false;
    };
    found = search(0, 0);
  }
  if (!found) {
    std::ostringstream os;
    os << "{\"k\":" << k << ",\"points\":[";
    for (int j = 0; j < m; ++j)
      os << (j ? "," : "") << "[\"" << to_string(in.pts[static_cast<std::size_t>(j)].t) << "\",\""
         << color_code(in.pts[static_cast<std::size_t>(j)].color) << "\"]";
    os << "]}";
    throw NoCutFound("no cut profile halves every color", os.str());
  }

  MomentHalving out;
  for (int p : cuts) {
    Cut c{p % 2 == 1, p / 2, Rat(0)};
    c.at = cut_parameter(in, c);
    out.profile.cuts.push_back(std::move(c));
  }
  std::tie(out.m1, out.m2) = realize(in, out.profile);
  out.counts1 = arcset_color_counts(out.m1, points);
  out.counts2 = arcset_color_counts(out.m2, points);
  if (!out.counts1.balanced(half) || !out.counts2.balanced(half))
    throw InternalError("realized halving sides do not match the cut profile");
  return out;
}

ArcSet find_k_arcset(std::span<const CirclePoint> points, int k, const ArcStepObserver& observer) {
  const int n = validate_circle_points(points);
  if (k < 0 || k > n) throw PreconditionViolated("find_k_arcset needs 0 <= k <= n");
  if (k == 0) return ArcSet{};
  ArcSet a = ArcSet::whole();
  if (k == n) return a;

  OpPlan plan = plan_ops(n, k);
  int value = n;
  for (Op op : plan.ops) {
    ArcStep step{op, 0, {}, Rat(0), std::nullopt, 0, 0};
    if (op == Op::Complement) {
      a = arcset_complement(a);
      value = n - value;
    } else {
      Rat shift(0);
      if (!a.is_whole()) {
        const Arc gap = arcset_complement(a).arcs().front();
        shift = frac(-(gap.lo + gap.hi) / 2);
      }
      auto [moved, set] = rotate_parameters(points, a, shift);
      MomentHalving h = moment_halve(set, moved, value);
      step.profile = h.profile;
      step.m1_components = h.m1.component_count();
      step.m2_components = h.m2.component_count();
      const ArcSet& keep = h.m1.component_count() <= 2 ? h.m1 : h.m2;
      if (keep.component_count() > 2) throw InternalError("neither halving side is a 2-arc set");
      a = rotate(keep, frac(-shift));
      step.shift = shift;
      value /= 2;
    }
    step.value = value;
    step.set = a;
    if (!arcset_color_counts(a, points).balanced(value) || a.component_count() > 2)
      throw InternalError("arc set lost its balance after " + plan_string(std::vector<Op>{op}));
    if (observer) observer(step);
  }
  return a;
}

}  // namespace tricut
