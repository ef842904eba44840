#include "tricut/arcset.hpp"

#include "tricut/errors.hpp"

#include <algorithm>
#include <tuple>

namespace tricut {

namespace {

// Sorts and merges pieces in [0, 1], then folds a piece ending at 1 into one
// starting at 0.
std::vector<Arc> normalize(std::vector<Interval> pieces) {
  pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                              [](const Interval& p) { return !(p.lo < p.hi); }),
               pieces.end());
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (auto& p : pieces) {
    if (!merged.empty() && p.lo <= merged.back().hi) {
      if (merged.back().hi < p.hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(std::move(p));
    }
  }
  std::vector<Arc> out;
  if (merged.empty()) return out;
  if (merged.size() == 1 && merged[0].lo == 0 && merged[0].hi == 1) {
    out.push_back({Rat(0), Rat(1)});
    return out;
  }
  const bool wraps = merged.size() >= 2 && merged.front().lo == 0 && merged.back().hi == 1;
  std::size_t first = wraps ? 1 : 0;
  std::size_t last = wraps ? merged.size() - 1 : merged.size();
  for (std::size_t i = first; i < last; ++i) out.push_back({merged[i].lo, merged[i].hi});
  if (wraps) out.push_back({merged.back().lo, Rat(merged.front().hi + 1)});
  return out;
}

void append_pieces(const Arc& arc, std::vector<Interval>& out) {
  Rat len = arc.hi - arc.lo;
  if (len <= 0) return;
  if (len >= 1) {
    out.push_back({Rat(0), Rat(1)});
    return;
  }
  Rat lo = frac(arc.lo);
  Rat hi = lo + len;
  if (hi <= 1) {
    out.push_back({std::move(lo), std::move(hi)});
  } else {
    out.push_back({std::move(lo), Rat(1)});
    out.push_back({Rat(0), Rat(hi - 1)});
  }
}

}  // namespace

ArcSet ArcSet::whole() {
  ArcSet s;
  s.arcs_.push_back({Rat(0), Rat(1)});
  return s;
}

ArcSet ArcSet::from_arcs(std::span<const Arc> arcs) {
  std::vector<Interval> pieces;
  for (const auto& a : arcs) append_pieces(a, pieces);
  ArcSet s;
  s.arcs_ = normalize(std::move(pieces));
  return s;
}

ArcSet ArcSet::from_intervals(std::span<const Interval> pieces) {
  std::vector<Interval> copy;
  for (const auto& p : pieces) {
    Rat lo = p.lo < 0 ? Rat(0) : p.lo;
    Rat hi = p.hi > 1 ? Rat(1) : p.hi;
    copy.push_back({std::move(lo), std::move(hi)});
  }
  ArcSet s;
  s.arcs_ = normalize(std::move(copy));
  return s;
}

bool ArcSet::is_whole() const {
  return arcs_.size() == 1 && arcs_[0].hi - arcs_[0].lo == 1;
}

std::vector<Interval> ArcSet::linear_pieces() const {
  std::vector<Interval> out;
  for (const auto& a : arcs_) append_pieces(a, out);
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

bool ArcSet::contains(const Rat& t) const {
  Rat u = frac(t);
  for (const auto& a : arcs_) {
    if (a.lo <= u && u < a.hi) return true;
    Rat v = u + 1;
    if (a.lo <= v && v < a.hi) return true;
  }
  return false;
}

bool ArcSet::on_boundary(const Rat& t) const {
  if (is_whole()) return false;
  Rat u = frac(t);
  for (const auto& a : arcs_)
    if (frac(a.lo) == u || frac(a.hi) == u) return true;
  return false;
}

bool operator<(const ArcSet& a, const ArcSet& b) {
  return std::lexicographical_compare(
      a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin(), b.arcs_.end(),
      [](const Arc& x, const Arc& y) { return std::tie(x.lo, x.hi) < std::tie(y.lo, y.hi); });
}

ArcSet arcset_complement(const ArcSet& a) {
  if (a.empty()) return ArcSet::whole();
  if (a.is_whole()) return ArcSet{};
  std::vector<Interval> gaps;
  Rat cursor(0);
  for (const auto& p : a.linear_pieces()) {
    if (cursor < p.lo) gaps.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1) gaps.push_back({cursor, Rat(1)});
  return ArcSet::from_intervals(gaps);
}

ArcSet arcset_intersection(const ArcSet& a, const ArcSet& b) {
  std::vector<Interval> out;
  for (const auto& p : a.linear_pieces())
    for (const auto& q : b.linear_pieces()) {
      const Rat& lo = p.lo < q.lo ? q.lo : p.lo;
      const Rat& hi = p.hi < q.hi ? p.hi : q.hi;
      if (lo < hi) out.push_back({lo, hi});
    }
  return ArcSet::from_intervals(out);
}

ColorCounts arcset_color_counts(const ArcSet& a, std::span<const CirclePoint> points) {
  ColorCounts counts;
  for (const auto& p : points) {
    if (a.on_boundary(p.t))
      throw BoundaryPoint("point parameter " + to_string(p.t) + " is an arc endpoint");
    if (p.color != Color::Black && a.contains(p.t)) ++counts[p.color];
  }
  return counts;
}

ArcSet rotate(const ArcSet& a, const Rat& delta) {
  if (a.is_whole()) return a;
  std::vector<Arc> shifted;
  for (const auto& arc : a.arcs()) shifted.push_back({Rat(arc.lo + delta), Rat(arc.hi + delta)});
  return ArcSet::from_arcs(shifted);
}

std::vector<CirclePoint> rotate(std::span<const CirclePoint> points, const Rat& delta) {
  std::vector<CirclePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({frac(p.t + delta), p.color});
  return out;
}

}  // namespace tricut
