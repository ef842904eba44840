#pragma once

#include "tricut/arcset.hpp"
#include "tricut/arrangement.hpp"
#include "tricut/lattice.hpp"
#include "tricut/wedge.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tricut {

/// Solver answer checked against an exhaustive oracle.
struct VerificationReport {
  std::string instance_id;
  std::string solver;
  std::string answer;  // solver output as JSON text
  bool oracle_checked = false;  // false when the instance is too large to enumerate
  std::size_t oracle_answers = 0;
  bool member = false;
  ColorCounts target;
  std::vector<ColorCounts> counts;  // recomputed per side
  double millis = 0;

  bool consistent() const {
    return !counts.empty() && counts.front() == target && (!oracle_checked || member);
  }
};

/// Ids of every complete bounded face.
std::vector<int> scan_all_complete_faces(const Arrangement& arr);

/// Ids of faces, bounded or not, whose boundary carries every color in
/// `colors`.
std::vector<int> scan_faces_with_colors(const Arrangement& arr, std::span<const Color> colors);

/// Face sign vectors found from the four corners of every vertex. A simple
/// arrangement of m >= 2 lines has 1 + m + m(m-1)/2 of them.
std::vector<std::vector<std::int8_t>> enumerate_face_signs(std::span<const ColoredLine> lines);

struct CrossingCounts {
  ColorCounts colors;
  int black = 0;
  int total() const { return colors.total() + black; }
};

/// Proper crossings of the open segment with each line. Throws
/// EndpointOnLine if an endpoint lies on a line.
CrossingCounts count_segment_crossings(const Segment& s, std::span<const ColoredLine> lines);

/// Bit i set iff point i belongs to the set.
std::uint64_t arcset_mask(const ArcSet& a, std::span<const CirclePoint> points);

/// Maximal circular runs of set bits, points taken in parameter order. The
/// full set counts as one run.
int cyclic_runs(std::uint64_t mask, std::span<const CirclePoint> points);

/// Every point subset realizable by at most two arcs holding exactly k of
/// each color, as sorted masks. Needs at most 63 points.
std::vector<std::uint64_t> enumerate_2arc_sets(std::span<const CirclePoint> points, int k);

/// Points inside the wedge, evaluated with orientation tests.
std::uint64_t wedge_mask(const DoubleWedge& w, std::span<const ColoredPoint> points);

/// Every point subset that is the content of a double wedge with exactly k
/// points of each color, as sorted masks. Candidate contents are the lines
/// separating two faces of the dual arrangement, and their complements.
std::vector<std::uint64_t> brute_oracle_wedges(std::span<const ColoredPoint> points, int k);

struct OracleLLine {
  LLine line;
  int k = 0;
  std::uint64_t mask = 0;  // region 1
};

/// Region-1 mask of an L-line with half-integer corner, in doubled integer
/// coordinates.
std::uint64_t lline_mask(const LLine& l, std::span<const LatticeColoredPoint> points);

/// min(mask, complement): equal for L-lines inducing the same bipartition.
std::uint64_t partition_key(std::uint64_t mask, std::size_t point_count);

/// All nontrivial balanced L-lines over the corner grid (midpoints between
/// consecutive sorted coordinates plus one outside on each end) and all six
/// ray pairs.
std::vector<OracleLLine> brute_oracle_llines(std::span<const LatticeColoredPoint> points);

/// Values 0 < k < n for which an open halfplane holds exactly k points of
/// each color. Points must have no three collinear.
std::vector<int> balanced_halfplane_splits(std::span<const ColoredPoint> points);

/// Smallest orthogonal convex hull over all sets of `count` points with
/// distinct coordinates, by enumerating every permutation pattern.
int minimum_ortho_hull_size(int count);

/// Shortest op sequence from n reaching each value (-1 if unreachable).
std::vector<int> bfs_plan_lengths(int n);

}  // namespace tricut
