#pragma once

#include "tricut/arrangement.hpp"

#include <span>
#include <vector>

namespace tricut {

struct CompleteFaceResult {
  Arrangement arrangement;
  int face_id = -1;
  const Face& face() const { return arrangement.face(face_id); }
};

/// Incremental finder: start from the triangle of the first line of each
/// color, insert the remaining lines in order and, whenever the tracked face
/// is split, keep the complete half. Throws NotSimple / MissingColor.
int find_complete_face(const Arrangement& arr);
CompleteFaceResult find_complete_face(std::span<const ColoredLine> lines);

/// Segment whose interior properly crosses exactly one line of each color
/// and no other line. `f` must be complete.
Segment extract_111_segment(const Arrangement& arr, const Face& f);

/// Nine lines: an R/G/B triangle, each side shielded by two nearly parallel
/// black lines. No face of the arrangement touches all four colors.
std::vector<ColoredLine> gen_shielded_counterexample();

/// Deterministic perturbation for instance generation: line i gets
/// i*eps added to c and i^2*eps added to its slope, eps shrinking until the
/// arrangement is simple. Never used on solver inputs.
std::vector<ColoredLine> perturb_to_simple(std::span<const ColoredLine> lines);

}  // namespace tricut
