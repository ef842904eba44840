#pragma once

#include "tricut/arcset.hpp"
#include "tricut/geometry.hpp"
#include "tricut/lattice.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

namespace tricut {

enum class GenKind {
  SimpleLines3C,
  SimpleLines4CShielded,
  Points3C,
  Points3CConvex,
  CirclePoints3C,
  LatticeRedHull,
  LatticeDiagonalCounterexample,
  ThreeDiskTriangle,
};

std::string_view kind_name(GenKind k);
std::optional<GenKind> parse_kind(std::string_view s);

/// n counts items per color.
struct GenSpec {
  GenKind kind = GenKind::Points3C;
  int n = 1;
  std::uint64_t seed = 0;
};

using Instance = std::variant<std::vector<ColoredLine>, std::vector<ColoredPoint>,
                              std::vector<CirclePoint>, std::vector<LatticeColoredPoint>>;

/// Reproducible for a fixed spec on every platform: draws come straight
/// from mt19937_64 without library distributions. Throws GenerationFailed.
Instance generate(const GenSpec& spec);

/// Seeded source with portable bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Simple arrangement with the given number of lines per color, each line
/// through two random integer points.
std::vector<ColoredLine> random_simple_lines(const ColorCounts& counts, Rng& rng);

/// Integer points, distinct coordinates, no three collinear, colors shuffled.
std::vector<ColoredPoint> random_points(const ColorCounts& counts, Rng& rng);

std::vector<ColoredPoint> convex_points(int n, Rng& rng);
std::vector<CirclePoint> random_circle_points(int n, Rng& rng);

/// Needs n >= 4: with fewer points per color every admissible set has a
/// hull larger than its red class.
std::vector<LatticeColoredPoint> lattice_red_hull(int n, Rng& rng);
std::vector<LatticeColoredPoint> lattice_diagonal(int n);
std::vector<ColoredPoint> three_disk_triangle(int n, Rng& rng);

}  // namespace tricut
