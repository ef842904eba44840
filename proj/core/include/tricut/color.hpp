#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace tricut {

/// Input colors. Black only appears in the four-color shielded fixture.
enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2, Black = 3 };

inline constexpr std::array<Color, 3> kPrimaryColors{Color::Red, Color::Green, Color::Blue};

constexpr int index(Color c) { return static_cast<int>(c); }

constexpr char color_code(Color c) {
  switch (c) {
    case Color::Red: return 'R';
    case Color::Green: return 'G';
    case Color::Blue: return 'B';
    case Color::Black: return 'K';
  }
  return '?';
}

/// Accepts "R", "G", "B", "K" (case-insensitive) and the full names.
std::optional<Color> parse_color(std::string_view s);

/// Per-color tally for the three primary colors, indexed by `index(Color)`.
struct ColorCounts {
  std::array<int, 3> v{0, 0, 0};

  int& operator[](Color c) { return v[static_cast<std::size_t>(index(c))]; }
  int operator[](Color c) const { return v[static_cast<std::size_t>(index(c))]; }
  int red() const { return v[0]; }
  int green() const { return v[1]; }
  int blue() const { return v[2]; }
  int total() const { return v[0] + v[1] + v[2]; }
  bool balanced(int k) const { return v[0] == k && v[1] == k && v[2] == k; }
  friend bool operator==(const ColorCounts&, const ColorCounts&) = default;
};

}  // namespace tricut
