#pragma once

#include <map>
#include <vector>

namespace tricut {

/// Abstract colored triangulation of S^(d-1): (d-1)-simplices given as
/// vertex-id tuples (d ids each), vertex colors in {0, ..., d}.
struct ColoredTriangulation {
  int d = 2;
  std::vector<std::vector<int>> simplices;
  std::map<int, int> colors;
};

enum class Parity { AllEven, AllOdd };

/// n_S for every good type S, indexed by the color the type omits.
std::vector<int> good_type_counts(const ColoredTriangulation& t);

/// Throws NotPseudomanifold unless every (d-2)-face lies in exactly two
/// simplices (and ids / colors are well formed).
void validate_pseudomanifold(const ColoredTriangulation& t);

/// Common parity of n_S over the d+1 good types. Throws MixedParity if the
/// parities disagree, which cannot happen on a valid sphere triangulation.
Parity parity_audit(const ColoredTriangulation& t);

}  // namespace tricut
