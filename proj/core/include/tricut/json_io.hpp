#pragma once

#include "tricut/arcset.hpp"
#include "tricut/arrangement.hpp"
#include "tricut/generate.hpp"
#include "tricut/jordan.hpp"
#include "tricut/lattice.hpp"
#include "tricut/oracles.hpp"
#include "tricut/triangulation.hpp"
#include "tricut/wedge.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tricut {

using Json = nlohmann::ordered_json;

// Every decoder throws PreconditionViolated on malformed input.

Json encode(const Rat& r);
Rat decode_rat(const Json& j);

Json encode(const Point& p);
Point decode_point(const Json& j);
Json encode(const ColoredPoint& p);
ColoredPoint decode_colored_point(const Json& j);
Json encode(const Line& l);
Json encode(const ColoredLine& l);
ColoredLine decode_colored_line(const Json& j);
Json encode(const Segment& s);
Segment decode_segment(const Json& j);
Json encode(const ColorCounts& c);

Json encode(const ArcSet& a);
ArcSet decode_arcset(const Json& j);
Json encode(const CirclePoint& p);
CirclePoint decode_circle_point(const Json& j);

Json encode(const LatticeColoredPoint& p);
LatticeColoredPoint decode_lattice_point(const Json& j);
Json encode(const LLine& l);
LLine decode_lline(const Json& j);

Json encode(const DoubleWedge& w);
DoubleWedge decode_wedge(const Json& j);

Json encode(const ColoredTriangulation& t);
ColoredTriangulation decode_triangulation(const Json& j);

/// Lines, vertices and faces with their boundary line ids and polygons.
Json encode(const Arrangement& a);

Json encode(const VerificationReport& r);

/// {"kind": ..., "n": ..., "seed": ..., <payload>} where the payload key is
/// "lines", "points", "circle_points" or "lattice_points".
Json encode_instance(const Instance& inst, const GenSpec& spec);
Instance decode_instance(const Json& j);

std::vector<ColoredLine> decode_lines(const Json& j);
std::vector<ColoredPoint> decode_points(const Json& j);
std::vector<CirclePoint> decode_circle_points(const Json& j);
std::vector<LatticeColoredPoint> decode_lattice_points(const Json& j);

Json parse_json(const std::string& text);

}  // namespace tricut
