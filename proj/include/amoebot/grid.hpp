#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace amoebot {

// The three infinite grids. Adjacency, ports and distance all depend on it.
enum class GridKind : std::uint8_t { square, triangular, king };

inline constexpr std::array<GridKind, 3> kAllGridKinds = {
    GridKind::square, GridKind::triangular, GridKind::king};

std::string_view to_string(GridKind kind);
std::optional<GridKind> parse_grid_kind(std::string_view text);

inline constexpr int kMaxDegree = 8;

using PortId = int;

struct Direction {
  int di = 0;
  int dj = 0;

  constexpr Direction operator-() const { return {-di, -dj}; }
  constexpr bool operator==(const Direction&) const = default;
};

struct Coord {
  int i = 0;
  int j = 0;

  constexpr auto operator<=>(const Coord&) const = default;

  constexpr Coord operator+(Direction d) const { return {i + d.di, j + d.dj}; }
  constexpr Coord operator-(Direction d) const { return {i - d.di, j - d.dj}; }
  constexpr Direction operator-(Coord other) const { return {i - other.i, j - other.j}; }
};

struct CoordHash {
  std::size_t operator()(Coord c) const noexcept {
    auto x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i));
    auto y = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j));
    std::uint64_t h = (x << 32) | y;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

// A set of ports of one particle, stored as a bitmask over [0, kMaxDegree).
class PortSet {
 public:
  constexpr PortSet() = default;
  constexpr explicit PortSet(std::uint16_t bits) : bits_(bits) {}
  PortSet(std::initializer_list<PortId> ports) {
    for (PortId p : ports) insert(p);
  }

  constexpr bool contains(PortId p) const { return (bits_ >> p) & 1U; }
  constexpr void insert(PortId p) { bits_ = static_cast<std::uint16_t>(bits_ | (1U << p)); }
  constexpr void erase(PortId p) { bits_ = static_cast<std::uint16_t>(bits_ & ~(1U << p)); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  constexpr std::uint16_t bits() const { return bits_; }

  std::vector<PortId> to_vector() const;

  constexpr bool operator==(const PortSet&) const = default;

 private:
  std::uint16_t bits_ = 0;
};

int degree(GridKind kind);

// Lattice offset of the neighbor behind `port` in the canonical frame.
// Throws std::out_of_range when port >= degree(kind).
Direction port_direction(GridKind kind, PortId port);

// Canonical port whose direction is `d`, if `d` is an edge offset of the grid.
std::optional<PortId> port_of_direction(GridKind kind, Direction d);

std::vector<Coord> neighbors(GridKind kind, Coord at);

int distance(GridKind kind, Coord a, Coord b);

// r_G: the port pointing the opposite way.
PortId opposite_port(GridKind kind, PortId port);

// n(a): first port of `occupied` strictly after `a` in clockwise order,
// wrapping around to `a` itself when it is the only member.
PortId next_occupied_port(GridKind kind, PortId a, PortSet occupied);

// Frame arithmetic: a particle with rotation `offset` calls canonical port
// (local + offset) mod degree by the name `local`.
inline int wrap(int value, int modulus) {
  int r = value % modulus;
  return r < 0 ? r + modulus : r;
}
inline PortId to_canonical(GridKind kind, PortId local, int offset) {
  return wrap(local + offset, degree(kind));
}
inline PortId to_local(GridKind kind, PortId canonical, int offset) {
  return wrap(canonical - offset, degree(kind));
}

}  // namespace amoebot
