#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amoebot/grid.hpp"

namespace amoebot {

// color = (i + multiplier * j) mod modulus
struct LinearScheme {
  int multiplier = 1;
  int modulus = 1;
};

// A sublattice tiling of width x height blocks, each block row shifted left
// by `shift`: color = ((i - shift * floor(j / height)) mod width) + width * (j mod height)
struct BlockScheme {
  int width = 1;
  int shift = 0;
  int height = 1;
};

// Explicit lookup over one period, row-major by j.
struct TableScheme {
  int period_i = 1;
  int period_j = 1;
  std::vector<int> colors;
};

using ColoringScheme = std::variant<LinearScheme, BlockScheme, TableScheme>;

// A periodic coloring of the k-th power of a grid.
struct ColoringPattern {
  GridKind kind = GridKind::square;
  int k = 1;
  int color_count = 0;
  ColoringScheme scheme;
  // Human readable description of the scheme, kept in reports.
  std::string origin;

  int color_at(int i, int j) const;
  int period_i() const;
  int period_j() const;
};

// Chromatic number of the k-th power. Throws std::invalid_argument for k < 1.
int color_count(GridKind kind, int k);

// Modulus in which identifier assignment tracks coordinates.
int tracking_modulus(GridKind kind, int k);

// Certified optimal pattern; results are memoized per (kind, k).
// Throws std::runtime_error if no candidate passes the validity check.
const ColoringPattern& pattern(GridKind kind, int k);

// f^k_G evaluated on tracked coordinates.
int color_at(GridKind kind, int k, int i, int j);

struct TrackedCoords {
  int i = 0;
  int j = 0;

  constexpr bool operator==(const TrackedCoords&) const = default;
};

// I^k_G and J^k_G: coordinates of a receiver that got the sender's `coords`
// through its own port `a`.
TrackedCoords coord_update_receive(GridKind kind, int k, TrackedCoords coords, PortId a);

struct ColoringConflict {
  Coord first;
  Coord second;
  int color = 0;
};

// Exhaustive check over one period: every vertex against every vertex within
// distance k. Returns the first conflicting pair found, if any.
std::optional<ColoringConflict> verify_coloring(const ColoringPattern& pattern);

// Exact chromatic number of the k-th power restricted to a width x height
// window. Limited to windows up to 5x5 and k <= 2.
int min_colors_bruteforce(GridKind kind, int k, int width, int height);

// Bits needed for one tracked coordinate in an identifier message.
int coordinate_message_bits(int k);

// `rows` lines of `cols` space separated colors; row index is j, column is i.
std::string color_table(const ColoringPattern& pattern, int rows, int cols);

}  // namespace amoebot
