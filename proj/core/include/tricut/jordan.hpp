#pragma once

#include "tricut/arcset.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tricut {

/// Halve is f(x) = floor(x/2), Complement is g(x) = n - x.
enum class Op { Halve, Complement };

struct OpPlan {
  int n = 0;
  int k = 0;
  std::vector<Op> ops;  // applied left to right, starting from n
};

/// Grows the interval of values that reach k backwards (preimages under f
/// while it lies below floor(n/2), reflection under g while above) until it
/// holds floor(n/2), then reads the ops forward behind a leading Halve.
/// k == n gives the empty plan.
OpPlan plan_ops(int n, int k);

/// Value of the ops applied to n.
int evaluate_plan(int n, std::span<const Op> ops);

/// "f"/"g" string form and its inverse (throws PreconditionViolated).
std::string plan_string(std::span<const Op> ops);
std::vector<Op> parse_plan(std::string_view text);

/// One cut of a moment-curve halving, over the points of A in linear order:
/// a gap cut sits before point `index` (index == m: after the last one), an
/// on-point cut removes point `index`.
struct Cut {
  bool on_point = false;
  int index = 0;
  Rat at;  // realized parameter
  friend bool operator==(const Cut& a, const Cut& b) {
    return a.on_point == b.on_point && a.index == b.index;
  }
};

struct CutProfile {
  std::vector<Cut> cuts;  // increasing

  /// +1 where the cubic with roots at the cuts is positive (the M1 side),
  /// -1 where negative, 0 on a cut.
  int side(const Rat& t) const;
};

struct MomentHalving {
  ArcSet m1;
  ArcSet m2;
  CutProfile profile;
  ColorCounts counts1;
  ColorCounts counts2;
};

/// Splits A (exactly k points of each color, at most two arcs, 0 not in A
/// unless A is the whole circle) by the first cut profile, in order of cut
/// count and then position, that leaves floor(k/2) of every color on each
/// side. For odd k the three cut points have distinct colors. Throws
/// NoCutFound if none exists.
MomentHalving moment_halve(const ArcSet& a, std::span<const CirclePoint> points, int k);

struct ArcStep {
  Op op;
  int value = 0;  // k after the step
  ArcSet set;
  Rat shift;      // rotation applied before halving
  std::optional<CutProfile> profile;
  std::size_t m1_components = 0;
  std::size_t m2_components = 0;
};
using ArcStepObserver = std::function<void(const ArcStep&)>;

/// At most two arcs holding exactly k points of every color.
ArcSet find_k_arcset(std::span<const CirclePoint> points, int k,
                     const ArcStepObserver& observer = {});

/// Shifts parameters and the arc set by delta (mod 1).
std::pair<std::vector<CirclePoint>, ArcSet> rotate_parameters(std::span<const CirclePoint> points,
                                                               const ArcSet& a, const Rat& delta);

/// Validates a CirclePoints input: parameters in [0,1), distinct, no black,
/// equally many of each color. Returns n.
int validate_circle_points(std::span<const CirclePoint> points);

}  // namespace tricut
