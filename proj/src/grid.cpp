#include "amoebot/grid.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace amoebot {

namespace {

// Clockwise port tables. They are the only assignment under which a particle
// receiving coordinates through port a recovers its own position from its
// sender's (see coord_update_receive in coloring.cpp).
constexpr std::array<Direction, 4> kSquareDirs = {{{-1, 0}, {0, -1}, {1, 0}, {0, 1}}};
constexpr std::array<Direction, 6> kTriangularDirs = {
    {{-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}}};
constexpr std::array<Direction, 8> kKingDirs = {
    {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}}};

std::span<const Direction> direction_table(GridKind kind) {
  switch (kind) {
    case GridKind::square: return kSquareDirs;
    case GridKind::triangular: return kTriangularDirs;
    case GridKind::king: return kKingDirs;
  }
  throw std::invalid_argument("unknown grid kind");
}

void check_port(GridKind kind, PortId port) {
  if (port < 0 || port >= degree(kind)) {
    throw std::out_of_range("port " + std::to_string(port) + " out of range for " +
                            std::string(to_string(kind)) + " grid");
  }
}

}  // namespace

std::string_view to_string(GridKind kind) {
  switch (kind) {
    case GridKind::square: return "square";
    case GridKind::triangular: return "triangular";
    case GridKind::king: return "king";
  }
  return "?";
}

std::optional<GridKind> parse_grid_kind(std::string_view text) {
  for (GridKind kind : kAllGridKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

int PortSet::size() const { return std::popcount(bits_); }

std::vector<PortId> PortSet::to_vector() const {
  std::vector<PortId> out;
  for (PortId p = 0; p < kMaxDegree; ++p) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

int degree(GridKind kind) { return static_cast<int>(direction_table(kind).size()); }

Direction port_direction(GridKind kind, PortId port) {
  check_port(kind, port);
  return direction_table(kind)[static_cast<std::size_t>(port)];
}

std::optional<PortId> port_of_direction(GridKind kind, Direction d) {
  auto table = direction_table(kind);
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (table[a] == d) return static_cast<PortId>(a);
  }
  return std::nullopt;
}

std::vector<Coord> neighbors(GridKind kind, Coord at) {
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(degree(kind)));
  for (Direction d : direction_table(kind)) out.push_back(at + d);
  return out;
}

int distance(GridKind kind, Coord a, Coord b) {
  const int di = a.i - b.i;
  const int dj = a.j - b.j;
  switch (kind) {
    case GridKind::square:
      return std::abs(di) + std::abs(dj);
    case GridKind::triangular:
      // Moves along (+1,-1) shorten both axes at once when the signs differ.
      if ((di >= 0 && dj <= 0) || (di <= 0 && dj >= 0)) {
        return std::max(std::abs(di), std::abs(dj));
      }
      return std::abs(di) + std::abs(dj);
    case GridKind::king:
      return std::max(std::abs(di), std::abs(dj));
  }
  throw std::invalid_argument("unknown grid kind");
}

PortId opposite_port(GridKind kind, PortId port) {
  check_port(kind, port);
  const int deg = degree(kind);
  return (port + deg / 2) % deg;
}

PortId next_occupied_port(GridKind kind, PortId a, PortSet occupied) {
  check_port(kind, a);
  if (occupied.empty()) throw std::invalid_argument("next_occupied_port: no occupied port");
  const int deg = degree(kind);
  for (int step = 1; step <= deg; ++step) {
    const PortId p = (a + step) % deg;
    if (occupied.contains(p)) return p;
  }
  throw std::invalid_argument("next_occupied_port: occupied set outside port range");
}

}  // namespace amoebot
